#include "smrls/rbf_network.hpp"

#include <cmath>
#include <stdexcept>

namespace smrls {

RbfNetwork build_grid_network(int per_dim, int dimension, double width) {
  if (per_dim < 1) throw std::invalid_argument("per_dim must be >= 1");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(width > 0.0)) throw std::invalid_argument("width must be > 0");

  Eigen::VectorXd coords(per_dim);
  if (per_dim == 1) {
    coords(0) = 0.0;
  } else {
    for (int i = 0; i < per_dim; ++i)
      coords(i) = -1.0 + 2.0 * i / (per_dim - 1);
  }

  long total = 1;
  for (int d = 0; d < dimension; ++d) total *= per_dim;

  RbfNetwork net;
  net.centers.resize(total, dimension);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int d = 0; d < dimension; ++d) {
      net.centers(idx, d) = coords(rem % per_dim);
      rem /= per_dim;
    }
  }
  net.widths = Eigen::VectorXd::Constant(total, width);
  net.weights = Eigen::VectorXd::Zero(total);
  return net;
}

void regressor_into(const RbfNetwork& net, const Eigen::VectorXd& input,
                    Eigen::VectorXd& out) {
  if (input.size() != net.dimension())
    throw std::invalid_argument("input dimension mismatch");
  const int n = net.size();
  out.resize(n);
  for (int i = 0; i < n; ++i) {
    const double d2 = (net.centers.row(i).transpose() - input).squaredNorm();
    const double s = net.widths(i);
    out(i) = std::exp(-d2 / (2.0 * s * s));
  }
}

Eigen::VectorXd regressor(const RbfNetwork& net, const Eigen::VectorXd& input) {
  Eigen::VectorXd out;
  regressor_into(net, input, out);
  return out;
}

double evaluate(const RbfNetwork& net, const Eigen::VectorXd& input) {
  Eigen::VectorXd phi;
  regressor_into(net, input, phi);
  return net.weights.dot(phi);
}

}  // namespace smrls
