#include "smrls/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smrls {

double pendulum_accel(const Eigen::Vector2d& state,
                      const PendulumParams& params) {
  const double x1 = state(0);
  const double x2 = state(1);
  const double total = params.cart_mass + params.pendulum_mass;
  const double c = std::cos(x1);
  const double num =
      params.gravity * std::sin(x1) -
      params.pendulum_mass * params.half_length * x2 * x2 * c * std::sin(x1) /
          total;
  const double den = params.half_length *
                     (4.0 / 3.0 - params.pendulum_mass * c * c / total);
  return num / den;
}

Eigen::Vector2d case_a_state(double t) {
  return {std::sin(t), std::cos(t)};
}

Eigen::Vector2d case_b_state(double t) {
  return {(20.0 + t) * std::sin(t) / 120.0,
          (std::sin(t) + (20.0 + t) * std::cos(t)) / 120.0};
}

CaseCTrajectory::CaseCTrajectory(std::uint64_t seed, double duration,
                                 int rounds, int grid, double box)
    : duration_(duration) {
  if (!(duration > 0.0)) throw std::invalid_argument("duration must be > 0");
  if (rounds < 1 || grid < 2) throw std::invalid_argument("bad sweep shape");
  if (!(box > 0.0) || box > 1.0)
    throw std::invalid_argument("box must be in (0, 1]");

  SplitMix64 rng(seed);
  const int total = rounds * grid * grid;
  const double cell = 2.0 * box / grid;
  ctrl_.resize(total, 2);
  int row = 0;
  for (int r = 0; r < rounds; ++r) {
    const bool row_major = rng.next_double() < 0.5;
    const bool flip_outer = rng.next_double() < 0.5;
    const bool flip_inner = rng.next_double() < 0.5;
    for (int a = 0; a < grid; ++a) {
      const int aa = flip_outer ? grid - 1 - a : a;
      for (int b = 0; b < grid; ++b) {
        const bool reverse = (a % 2) == (flip_inner ? 1 : 0);
        const int bb = reverse ? grid - 1 - b : b;
        const int ix = row_major ? aa : bb;
        const int iy = row_major ? bb : aa;
        ctrl_(row, 0) = -box + (ix + rng.next_double()) * cell;
        ctrl_(row, 1) = -box + (iy + rng.next_double()) * cell;
        ++row;
      }
    }
  }

  const int k = total;
  knots_.resize(k + 1);
  knots_(0) = 0.0;
  for (int i = 0; i < k; ++i)
    knots_(i + 1) = knots_(i) + 0.5 + rng.next_double();
  knots_ *= duration / knots_(k);
  knots_(k) = duration;

  // wrap three knot intervals past each end so every cubic span has a
  // full support
  ext_.resize(k + 7);
  for (int i = 0; i <= k; ++i) ext_(i + 3) = knots_(i);
  for (int i = 1; i <= 3; ++i) {
    ext_(3 - i) = knots_(0) - (knots_(k) - knots_(k - i));
    ext_(k + 3 + i) = knots_(k) + (knots_(i) - knots_(0));
  }
}

Eigen::Vector2d CaseCTrajectory::state(double t) const {
  const int k = static_cast<int>(ctrl_.rows());
  double u = std::fmod(t, duration_);
  if (u < 0.0) u += duration_;

  int span = 0;
  {
    // last span j with knots_(j) <= u
    int lo = 0, hi = k;
    while (lo < hi) {
      const int mid = (lo + hi + 1) / 2;
      if (knots_(mid) <= u)
        lo = mid;
      else
        hi = mid - 1;
    }
    span = std::clamp(lo, 0, k - 1);
  }

  Eigen::Vector2d d[4];
  for (int i = 0; i < 4; ++i) {
    const int ci = ((span - 3 + i) % k + k) % k;
    d[i] = ctrl_.row(ci).transpose();
  }
  for (int r = 1; r <= 3; ++r) {
    for (int i = 3; i >= r; --i) {
      const int il = span - 3 + i;
      const double lo = ext_(il + 3);
      const double hi = ext_(il + 7 - r);
      const double alpha = (u - lo) / (hi - lo);
      d[i] = (1.0 - alpha) * d[i - 1] + alpha * d[i];
    }
  }
  return d[3];
}

}  // namespace smrls
