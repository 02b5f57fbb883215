#include <Eigen/Cholesky>

#include "smrls/smrls.hpp"

namespace smrls {

Eigen::MatrixXd SmrlsTrainer::rebuild_information_matrix() const {
  const long n = net_.size();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd info = p0_.ldlt().solve(identity);
  Eigen::VectorXd phi;
  for (int j = 1; j <= store_.total(); ++j) {
    if (!store_.visited(j)) continue;
    regressor_into(net_, store_.lookup(j).input, phi);
    info.noalias() += phi * phi.transpose();
  }
  return info;
}

}  // namespace smrls
