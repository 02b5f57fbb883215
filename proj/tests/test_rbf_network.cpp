#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "oracle_helpers.hpp"
#include "smrls/rbf_network.hpp"

using namespace smrls;

TEST_CASE("grid network covers the unit square including the boundary") {
  const RbfNetwork net = build_grid_network(3, 2, 1.0);
  REQUIRE(net.size() == 9);
  REQUIRE(net.dimension() == 2);
  CHECK(net.weights.isZero(0.0));
  CHECK((net.widths.array() == 1.0).all());

  // first dimension varies fastest
  const double expect[9][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {0, 0},
                               {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
  for (int i = 0; i < 9; ++i) {
    CHECK(net.centers(i, 0) == expect[i][0]);
    CHECK(net.centers(i, 1) == expect[i][1]);
  }
}

TEST_CASE("width parameter changes widths only") {
  const RbfNetwork narrow = build_grid_network(3, 2, 1.0);
  const RbfNetwork wide = build_grid_network(3, 2, 2.0);
  CHECK(testutil::exactly_equal(narrow.centers, wide.centers));
  CHECK((wide.widths.array() == 2.0).all());
}

TEST_CASE("degenerate grids") {
  const RbfNetwork one = build_grid_network(1, 3, 0.5);
  REQUIRE(one.size() == 1);
  CHECK(one.centers.row(0).isZero(0.0));

  CHECK_THROWS_AS(build_grid_network(0, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid_network(3, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid_network(3, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid_network(3, 2, -1.0), std::invalid_argument);
}

TEST_CASE("regressor analytic values") {
  RbfNetwork net = build_grid_network(1, 1, 1.0);
  Eigen::VectorXd x(1);

  x << 0.0;
  CHECK(regressor(net, x)(0) == doctest::Approx(1.0));

  x << 1.0;
  CHECK(regressor(net, x)(0) == doctest::Approx(std::exp(-0.5)));

  const RbfNetwork grid = build_grid_network(3, 2, 1.0);
  Eigen::VectorXd origin(2);
  origin << 0.0, 0.0;
  const Eigen::VectorXd phi = regressor(grid, origin);
  int argmax = 0;
  phi.maxCoeff(&argmax);
  CHECK(argmax == 4);  // (0,0) center
  CHECK((phi.array() > 0.0).all());
  CHECK((phi.array() <= 1.0).all());
}

TEST_CASE("regressor rejects dimension mismatch") {
  const RbfNetwork net = build_grid_network(3, 2, 1.0);
  Eigen::VectorXd bad(3);
  bad.setZero();
  CHECK_THROWS_AS(regressor(net, bad), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(net, bad), std::invalid_argument);
}

TEST_CASE("evaluate basics") {
  RbfNetwork net = build_grid_network(3, 2, 1.0);
  Eigen::VectorXd x(2);
  x << 0.3, -0.7;
  CHECK(evaluate(net, x) == 0.0);

  RbfNetwork single = build_grid_network(1, 2, 1.0);
  single.weights(0) = 2.0;
  Eigen::VectorXd center(2);
  center.setZero();
  CHECK(evaluate(single, center) == doctest::Approx(2.0));
}

TEST_CASE("permutation of neurons leaves evaluate unchanged") {
  testutil::SplitMix64 rng(11);
  RbfNetwork net = build_grid_network(3, 2, 1.0);
  net.weights = testutil::random_vector(9, rng);

  std::vector<int> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  // deterministic shuffle
  for (int i = 8; i > 0; --i)
    std::swap(perm[i], perm[static_cast<int>(rng.next_u64() % (i + 1))]);

  RbfNetwork shuffled = net;
  for (int i = 0; i < 9; ++i) {
    shuffled.centers.row(i) = net.centers.row(perm[i]);
    shuffled.widths(i) = net.widths(perm[i]);
    shuffled.weights(i) = net.weights(perm[i]);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::VectorXd x = testutil::random_vector(2, rng);
    CHECK(evaluate(net, x) == doctest::Approx(evaluate(shuffled, x)));
  }
}

TEST_CASE("batch fit of a representable function matches at training inputs") {
  // targets generated by a hidden weight vector; the batch solve with a
  // weak prior must recover the outputs at the sample points
  testutil::SplitMix64 rng(21);
  RbfNetwork net = build_grid_network(3, 2, 1.0);
  const Eigen::VectorXd truth = testutil::random_vector(9, rng, -2.0, 2.0);

  std::vector<WeightedSample> samples;
  std::vector<Eigen::VectorXd> inputs;
  for (int i = 0; i < 40; ++i) {
    const Eigen::VectorXd x = testutil::random_vector(2, rng);
    const Eigen::VectorXd phi = regressor(net, x);
    samples.push_back({phi, truth.dot(phi), 1.0});
    inputs.push_back(x);
  }
  const Eigen::MatrixXd p0 =
      1e8 * Eigen::MatrixXd::Identity(9, 9);  // weak prior
  net.weights = batch_weighted_least_squares(samples, p0,
                                             Eigen::VectorXd::Zero(9));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const double target = truth.dot(regressor(net, inputs[i]));
    CHECK(evaluate(net, inputs[i]) == doctest::Approx(target).epsilon(1e-6));
  }
}
