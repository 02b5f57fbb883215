#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "smrls/pendulum.hpp"

namespace smrls {

enum class ExperimentKind { CaseA, CaseB, CaseC, GlobalRbf, Custom };
enum class TrainerKind { Sgd, Rls, Ffrls, Smrls };
enum class TrajectoryKind { CaseA, CaseB, CaseC };

std::string to_string(ExperimentKind kind);
std::string to_string(TrainerKind kind);
std::string to_string(TrajectoryKind kind);

/**
 * Fully resolved experiment description. Every field has a benchmark
 * default; named experiments differ only in trajectory, duration,
 * perturbation schedule, snapshot times and reporting windows.
 */
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Custom;
  TrainerKind trainer = TrainerKind::Smrls;
  TrajectoryKind trajectory = TrajectoryKind::CaseB;

  int neurons_per_dim = 3;
  int dimension = 2;
  double width = 1.0;
  int partitions_per_dim = 100;

  double eta = 0.02;
  double lambda = 0.999;
  double p0_scale = 10.0;
  double w0 = 0.0;

  PendulumParams plant;
  double perturb_time = std::numeric_limits<double>::infinity();
  double perturbed_half_length = 0.3;

  double duration = 100.0;
  double period = 0.01;

  std::vector<double> snapshots;
  // extra reporting windows [a,b] on top of the full-run metrics
  std::vector<std::pair<double, double>> tracking_windows;
  std::vector<std::pair<double, double>> learned_windows;

  std::vector<double> bounds_min{-1.0, -1.0};
  std::vector<double> bounds_max{1.0, 1.0};

  std::uint64_t seed = 1;
  std::string out_dir = "out";
  bool dump_store = false;
};

// Benchmark defaults for a named experiment/trainer pair.
ExperimentConfig default_config(ExperimentKind experiment, TrainerKind trainer);

// Domain checks shared by parsing and programmatic construction.
// Throws ValidationError.
void validate_config(const ExperimentConfig& cfg);

// Flat key = value file with # comments. Unknown keys and bad values are
// hard errors; absent keys take the defaults of the named experiment.
ExperimentConfig parse_config(const std::string& path);

// Every key with its effective value, in the canonical order. Written as
// the resolved-config echo; feeding that file back through parse_config
// reproduces the run.
std::vector<std::pair<std::string, std::string>> resolved_entries(
    const ExperimentConfig& cfg);

// Number of training steps (duration / period, validated to be integral).
long config_steps(const ExperimentConfig& cfg);

}  // namespace smrls
