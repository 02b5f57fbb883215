#pragma once

#include <Eigen/Core>
#include <vector>

namespace smrls {

// Floor for the downdate denominator 1 - v'Pv. Crossing it means the
// covariance no longer contains the information being removed.
inline constexpr double kDowndateGuard = 1e-10;

// Average P with its transpose in place, without allocating.
void symmetrize(Eigen::MatrixXd& p);

// Rank-one covariance change via the matrix inversion lemma:
//   sign = +1 absorbs regressor v, sign = -1 removes it.
// work receives P*v. Throws DowndateSingularError if removal would cross
// the positivity guard. The result is re-symmetrized.
void rank_one_update_inplace(Eigen::MatrixXd& p, const Eigen::VectorXd& v,
                             int sign, Eigen::VectorXd& work);
Eigen::MatrixXd rank_one_update(const Eigen::MatrixXd& p,
                                const Eigen::VectorXd& v, int sign);

// Normalized gradient descent on the instantaneous squared output error.
class SgdTrainer {
 public:
  SgdTrainer(Eigen::VectorXd w0, double learning_rate);

  void step(const Eigen::VectorXd& phi, double y);
  const Eigen::VectorXd& weights() const { return weights_; }
  double learning_rate() const { return learning_rate_; }

 private:
  Eigen::VectorXd weights_;
  double learning_rate_;
};

/**
 * Recursive least squares with exponential forgetting. forgetting = 1
 * recovers ordinary RLS. Covariance is kept symmetric explicitly.
 */
class FfrlsTrainer {
 public:
  FfrlsTrainer(Eigen::VectorXd w0, Eigen::MatrixXd p0, double forgetting);

  void step(const Eigen::VectorXd& phi, double y);
  const Eigen::VectorXd& weights() const { return weights_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }
  double forgetting() const { return forgetting_; }

 private:
  Eigen::VectorXd weights_;
  Eigen::MatrixXd covariance_;
  double forgetting_;
  Eigen::VectorXd work_;
};

// One observation for the batch reference solver.
struct WeightedSample {
  Eigen::VectorXd phi;
  double y = 0.0;
  double weight = 1.0;
};

// Direct solve of the regularized weighted least squares problem
//   min_W sum_i weight_i (y_i - W'phi_i)^2 + (W - w0)' p0^{-1} (W - w0)
// by dense factorization. Reference implementation for tests; not part of
// any recursive path.
Eigen::VectorXd batch_weighted_least_squares(
    const std::vector<WeightedSample>& samples, const Eigen::MatrixXd& p0,
    const Eigen::VectorXd& w0);

}  // namespace smrls
