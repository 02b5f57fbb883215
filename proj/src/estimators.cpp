#include "smrls/estimators.hpp"

#include <stdexcept>

#include "smrls/errors.hpp"

namespace smrls {

void symmetrize(Eigen::MatrixXd& p) {
  const long n = p.rows();
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < i; ++j) {
      const double m = 0.5 * (p(i, j) + p(j, i));
      p(i, j) = m;
      p(j, i) = m;
    }
  }
}

void rank_one_update_inplace(Eigen::MatrixXd& p, const Eigen::VectorXd& v,
                             int sign, Eigen::VectorXd& work) {
  if (p.rows() != p.cols() || p.rows() != v.size())
    throw std::invalid_argument("covariance/regressor size mismatch");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");

  work.noalias() = p * v;
  const double denom = 1.0 + sign * v.dot(work);
  if (sign < 0 && denom < kDowndateGuard)
    throw DowndateSingularError("covariance downdate lost positivity");
  p.noalias() -= (sign / denom) * (work * work.transpose());
  symmetrize(p);
}

Eigen::MatrixXd rank_one_update(const Eigen::MatrixXd& p,
                                const Eigen::VectorXd& v, int sign) {
  Eigen::MatrixXd out = p;
  Eigen::VectorXd work;
  rank_one_update_inplace(out, v, sign, work);
  return out;
}

SgdTrainer::SgdTrainer(Eigen::VectorXd w0, double learning_rate)
    : weights_(std::move(w0)), learning_rate_(learning_rate) {
  if (!(learning_rate_ > 0.0))
    throw std::invalid_argument("learning_rate must be > 0");
}

void SgdTrainer::step(const Eigen::VectorXd& phi, double y) {
  if (phi.size() != weights_.size())
    throw std::invalid_argument("regressor size mismatch");
  const double err = y - weights_.dot(phi);
  weights_.noalias() += learning_rate_ * err * phi;
}

FfrlsTrainer::FfrlsTrainer(Eigen::VectorXd w0, Eigen::MatrixXd p0,
                           double forgetting)
    : weights_(std::move(w0)),
      covariance_(std::move(p0)),
      forgetting_(forgetting) {
  if (covariance_.rows() != covariance_.cols() ||
      covariance_.rows() != weights_.size())
    throw std::invalid_argument("initial covariance size mismatch");
  if (!(forgetting_ > 0.0) || forgetting_ > 1.0)
    throw std::invalid_argument("forgetting must be in (0, 1]");
  symmetrize(covariance_);
}

void FfrlsTrainer::step(const Eigen::VectorXd& phi, double y) {
  if (phi.size() != weights_.size())
    throw std::invalid_argument("regressor size mismatch");

  // covariance sweep, then gain from the updated covariance
  work_.noalias() = covariance_ * phi;
  const double denom = forgetting_ + phi.dot(work_);
  covariance_.noalias() -= (1.0 / denom) * (work_ * work_.transpose());
  covariance_ *= 1.0 / forgetting_;
  symmetrize(covariance_);

  const double err = y - weights_.dot(phi);
  work_.noalias() = covariance_ * phi;
  weights_.noalias() += err * work_;
}

}  // namespace smrls
