#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smrls/config.hpp"
#include "smrls/input_space.hpp"
#include "smrls/pendulum.hpp"
#include "smrls/rbf_network.hpp"

namespace smrls {

struct StepRow {
  double t;
  double x1, x2;
  double xbar1, xbar2;
  double y;
  double yhat;  // a priori prediction, before the trainer step
  double err;   // y - yhat
  int partition = 0;  // 1-based; only meaningful for SMRLS runs
};

struct WeightSnapshot {
  double time;
  Eigen::VectorXd weights;
};

struct StoreDumpRow {
  int partition;
  Eigen::VectorXd gamma;
  double phi;
  bool visited;
};

struct RunRecord {
  std::vector<StepRow> rows;
  std::vector<WeightSnapshot> snapshots;
  std::vector<std::pair<std::string, double>> metrics;
  bool has_partition = false;
  Eigen::VectorXd final_weights;
  std::vector<StoreDumpRow> store_dump;           // filled when requested
  std::optional<Eigen::MatrixXd> control_points;  // case C only
  std::optional<Eigen::VectorXd> knots;           // case C only
};

// Time-parameterized state path. Case C curves are owned by the returned
// closure.
std::function<Eigen::Vector2d(double)> make_trajectory(TrajectoryKind kind,
                                                       std::uint64_t seed,
                                                       double duration);

// Root mean square of a series; empty series yields 0.
double rms(const std::vector<double>& values);

// Learned-knowledge error series along an evaluation path:
// e(t) = f_I(x(t)) - W . Phi(xbar(t)) at t = period, 2*period, ...
std::vector<double> evaluate_learned(
    const Eigen::VectorXd& weights, const RbfNetwork& net,
    const Normalizer& norm,
    const std::function<Eigen::Vector2d(double)>& path, double duration,
    double period, const PendulumParams& plant);

// Full training run per the configured protocol: drive the trajectory,
// train in real time, record rows, snapshots and summary metrics.
RunRecord run_experiment(const ExperimentConfig& cfg);

}  // namespace smrls
