#include <Eigen/Cholesky>
#include <stdexcept>

#include "smrls/estimators.hpp"

namespace smrls {

Eigen::VectorXd batch_weighted_least_squares(
    const std::vector<WeightedSample>& samples, const Eigen::MatrixXd& p0,
    const Eigen::VectorXd& w0) {
  const long n = w0.size();
  if (p0.rows() != n || p0.cols() != n)
    throw std::invalid_argument("p0 size mismatch");

  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd info = p0.ldlt().solve(identity);
  Eigen::VectorXd rhs = info * w0;
  for (const auto& s : samples) {
    if (s.phi.size() != n)
      throw std::invalid_argument("sample regressor size mismatch");
    info.noalias() += s.weight * (s.phi * s.phi.transpose());
    rhs.noalias() += s.weight * s.y * s.phi;
  }
  return info.ldlt().solve(rhs);
}

}  // namespace smrls
