#pragma once

#include <Eigen/Core>

namespace smrls {

/**
 * Gaussian RBF network with fixed centers and widths.
 *
 * Centers are stored row-wise (N x n). Only the weights are meant to be
 * mutated after construction; estimators own that responsibility.
 */
struct RbfNetwork {
  Eigen::MatrixXd centers;  // N x n, one center per row
  Eigen::VectorXd widths;   // N
  Eigen::VectorXd weights;  // N

  int size() const { return static_cast<int>(centers.rows()); }
  int dimension() const { return static_cast<int>(centers.cols()); }
};

// Uniform grid of per_dim^dimension centers over [-1,1]^dimension, all with
// the same width, weights zeroed. Center index runs fastest along the first
// input dimension. per_dim == 1 places the single center at the origin.
RbfNetwork build_grid_network(int per_dim, int dimension, double width);

// Regressor vector Phi(x), components exp(-|x - c_i|^2 / (2 s_i^2)).
void regressor_into(const RbfNetwork& net, const Eigen::VectorXd& input,
                    Eigen::VectorXd& out);
Eigen::VectorXd regressor(const RbfNetwork& net, const Eigen::VectorXd& input);

// Network output W . Phi(x) using the weights stored in the network.
double evaluate(const RbfNetwork& net, const Eigen::VectorXd& input);

}  // namespace smrls
