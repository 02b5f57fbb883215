#include "smrls/smrls.hpp"

#include <stdexcept>
#include <utility>

#include "smrls/estimators.hpp"

namespace smrls {

SmrlsTrainer::SmrlsTrainer(const RbfNetwork& net, Normalizer normalizer,
                           int total_partitions, Eigen::VectorXd w0,
                           Eigen::MatrixXd p0,
                           std::shared_ptr<const MemoryUpdateRule> rule)
    : net_(net),
      normalizer_(std::move(normalizer)),
      store_(total_partitions, normalizer_.dimension()),
      rule_(std::move(rule)),
      weights_(std::move(w0)),
      covariance_(std::move(p0)) {
  if (normalizer_.dimension() != net_.dimension())
    throw std::invalid_argument("normalizer/network dimension mismatch");
  if (weights_.size() != net_.size())
    throw std::invalid_argument("initial weights size mismatch");
  if (covariance_.rows() != covariance_.cols() ||
      covariance_.rows() != net_.size())
    throw std::invalid_argument("initial covariance size mismatch");
  if (!rule_) throw std::invalid_argument("memory update rule is null");
  symmetrize(covariance_);
  p0_ = covariance_;
}

void SmrlsTrainer::step(const Eigen::VectorXd& raw_input, double measurement) {
  normalizer_.normalize_into(raw_input, xnorm_);
  const int idx = encode_partition(xnorm_, store_.total());

  incoming_.input = xnorm_;
  incoming_.output = measurement;
  const auto res = store_.update(idx, incoming_, *rule_);

  regressor_into(net_, xnorm_, phi_new_);

  // remove the displaced sample's information first, but only if the cell
  // had one; a fresh cell's placeholder was never absorbed
  if (res.visited_before) {
    regressor_into(net_, res.displaced.input, phi_old_);
    rank_one_update_inplace(covariance_, phi_old_, -1, work_);
  }
  rank_one_update_inplace(covariance_, phi_new_, +1, work_);

  const double err_new = measurement - weights_.dot(phi_new_);
  if (res.visited_before) {
    const double err_old = res.displaced.output - weights_.dot(phi_old_);
    work_ = err_new * phi_new_ - err_old * phi_old_;
    weights_.noalias() += covariance_ * work_;
  } else {
    weights_.noalias() += covariance_ * (err_new * phi_new_);
  }
  last_partition_ = idx;
}

}  // namespace smrls
