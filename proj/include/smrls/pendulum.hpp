#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace smrls {

// Inverted pendulum on a cart, matched to the benchmark constants.
struct PendulumParams {
  double gravity = 9.8;
  double cart_mass = 0.1;
  double pendulum_mass = 0.02;
  double half_length = 0.2;
};

// Input-independent part of the angular acceleration, the scalar field the
// networks are trained to approximate. state = (angle, angular rate).
double pendulum_accel(const Eigen::Vector2d& state,
                      const PendulumParams& params);

// Repetitive circular state trajectory.
Eigen::Vector2d case_a_state(double t);

// Slowly expanding spiral; stays inside the unit box for t in [0,100].
Eigen::Vector2d case_b_state(double t);

/**
 * splitmix64. Tiny, seedable, and bit-portable across platforms, which
 * keeps generated trajectories identical for a given seed everywhere.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) *
           (1.0 / 9007199254740992.0);
  }

 private:
  std::uint64_t state_;
};

/**
 * Random closed trajectory for the generalization experiment: a periodic
 * non-uniform cubic B-spline whose control points are drawn by serpentine
 * sweeps over a coarse cell grid. The sweeps guarantee broad coverage with
 * recency concentrated in one region at a time, and the spline inherits
 * the control polygon's bounding box, so the curve never leaves the unit
 * box. Knot spacing is randomized, then scaled to the requested duration.
 */
class CaseCTrajectory {
 public:
  explicit CaseCTrajectory(std::uint64_t seed, double duration = 300.0,
                           int rounds = 3, int grid = 6, double box = 0.95);

  Eigen::Vector2d state(double t) const;
  double duration() const { return duration_; }
  const Eigen::MatrixXd& control_points() const { return ctrl_; }
  const Eigen::VectorXd& knots() const { return knots_; }

 private:
  double duration_;
  Eigen::MatrixXd ctrl_;   // K x 2
  Eigen::VectorXd knots_;  // K + 1, knots(0) = 0, knots(K) = duration
  Eigen::VectorXd ext_;    // knot vector padded for the cubic recursion
};

}  // namespace smrls
