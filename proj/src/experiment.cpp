#include "smrls/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>

#include "smrls/errors.hpp"
#include "smrls/estimators.hpp"
#include "smrls/smrls.hpp"

namespace smrls {
namespace {

std::string window_tag(double a, double b) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%g_%g", a, b);
  return buf;
}

double windowed_rms(const std::vector<StepRow>& rows, double a, double b,
                    double period) {
  double sum = 0.0;
  long count = 0;
  for (const auto& r : rows) {
    if (r.t >= a - period / 2 && r.t <= b + period / 2) {
      sum += r.err * r.err;
      ++count;
    }
  }
  return count ? std::sqrt(sum / count) : 0.0;
}

double windowed_rms(const std::vector<double>& errs, double a, double b,
                    double period) {
  double sum = 0.0;
  long count = 0;
  for (std::size_t i = 0; i < errs.size(); ++i) {
    const double t = static_cast<double>(i + 1) * period;
    if (t >= a - period / 2 && t <= b + period / 2) {
      sum += errs[i] * errs[i];
      ++count;
    }
  }
  return count ? std::sqrt(sum / count) : 0.0;
}

}  // namespace

double rms(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum / static_cast<double>(values.size()));
}

std::function<Eigen::Vector2d(double)> make_trajectory(TrajectoryKind kind,
                                                       std::uint64_t seed,
                                                       double duration) {
  switch (kind) {
    case TrajectoryKind::CaseA:
      return [](double t) { return case_a_state(t); };
    case TrajectoryKind::CaseB:
      return [](double t) { return case_b_state(t); };
    case TrajectoryKind::CaseC: {
      auto curve = std::make_shared<CaseCTrajectory>(seed, duration);
      return [curve](double t) { return curve->state(t); };
    }
  }
  throw std::logic_error("unknown trajectory kind");
}

std::vector<double> evaluate_learned(
    const Eigen::VectorXd& weights, const RbfNetwork& net,
    const Normalizer& norm,
    const std::function<Eigen::Vector2d(double)>& path, double duration,
    double period, const PendulumParams& plant) {
  const long steps = std::lround(duration / period);
  std::vector<double> errs;
  errs.reserve(static_cast<std::size_t>(steps));
  Eigen::VectorXd x(2), xbar, phi;
  for (long k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k) * period;
    const Eigen::Vector2d state = path(t);
    x(0) = state(0);
    x(1) = state(1);
    const double y = pendulum_accel(state, plant);
    norm.normalize_into(x, xbar);
    regressor_into(net, xbar, phi);
    errs.push_back(y - weights.dot(phi));
  }
  return errs;
}

RunRecord run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);

  const RbfNetwork net =
      build_grid_network(cfg.neurons_per_dim, cfg.dimension, cfg.width);
  const int n_w = net.size();

  Eigen::VectorXd lo(cfg.dimension), hi(cfg.dimension);
  for (int i = 0; i < cfg.dimension; ++i) {
    lo(i) = cfg.bounds_min[static_cast<std::size_t>(i)];
    hi(i) = cfg.bounds_max[static_cast<std::size_t>(i)];
  }
  const Normalizer norm(lo, hi);

  std::shared_ptr<CaseCTrajectory> curve;
  std::function<Eigen::Vector2d(double)> path;
  if (cfg.trajectory == TrajectoryKind::CaseC) {
    curve = std::make_shared<CaseCTrajectory>(cfg.seed, cfg.duration);
    path = [curve](double t) { return curve->state(t); };
  } else {
    path = make_trajectory(cfg.trajectory, cfg.seed, cfg.duration);
  }

  const Eigen::VectorXd w0 = Eigen::VectorXd::Constant(n_w, cfg.w0);
  const Eigen::MatrixXd p0 =
      cfg.p0_scale * Eigen::MatrixXd::Identity(n_w, n_w);

  long total_partitions = 1;
  for (int d = 0; d < cfg.dimension; ++d)
    total_partitions *= cfg.partitions_per_dim;

  std::optional<SgdTrainer> sgd;
  std::optional<FfrlsTrainer> rls;
  std::optional<SmrlsTrainer> selective;
  switch (cfg.trainer) {
    case TrainerKind::Sgd:
      sgd.emplace(w0, cfg.eta);
      break;
    case TrainerKind::Rls:
      rls.emplace(w0, p0, 1.0);
      break;
    case TrainerKind::Ffrls:
      rls.emplace(w0, p0, cfg.lambda);
      break;
    case TrainerKind::Smrls:
      selective.emplace(net, norm, static_cast<int>(total_partitions), w0, p0);
      break;
  }
  const auto weights_now = [&]() -> const Eigen::VectorXd& {
    if (sgd) return sgd->weights();
    if (rls) return rls->weights();
    return selective->weights();
  };

  const long steps = config_steps(cfg);
  RunRecord rec;
  rec.has_partition = (cfg.trainer == TrainerKind::Smrls);
  rec.rows.reserve(static_cast<std::size_t>(steps));

  PendulumParams plant = cfg.plant;
  Eigen::VectorXd x(2), xbar, phi;
  for (long k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k) * cfg.period;
    const Eigen::Vector2d state = path(t);
    plant.half_length = (t >= cfg.perturb_time) ? cfg.perturbed_half_length
                                                : cfg.plant.half_length;
    const double y = pendulum_accel(state, plant);
    x(0) = state(0);
    x(1) = state(1);
    norm.normalize_into(x, xbar);
    regressor_into(net, xbar, phi);
    const double yhat = weights_now().dot(phi);

    try {
      if (sgd) sgd->step(phi, y);
      else if (rls) rls->step(phi, y);
      else selective->step(x, y);
    } catch (const TrainerError&) {
      throw;
    } catch (const std::exception& e) {
      throw TrainerError(static_cast<std::size_t>(k), e.what());
    }

    StepRow row;
    row.t = t;
    row.x1 = state(0);
    row.x2 = state(1);
    row.xbar1 = xbar(0);
    row.xbar2 = xbar(1);
    row.y = y;
    row.yhat = yhat;
    row.err = y - yhat;
    row.partition = selective ? selective->last_partition() : 0;
    rec.rows.push_back(row);

    for (double s : cfg.snapshots) {
      if (std::abs(t - s) < cfg.period / 2)
        rec.snapshots.push_back({s, weights_now()});
    }
  }
  rec.final_weights = weights_now();

  rec.metrics.emplace_back("steps", static_cast<double>(steps));
  rec.metrics.emplace_back("tracking_rms_full",
                           windowed_rms(rec.rows, 0.0, cfg.duration,
                                        cfg.period));
  for (const auto& [a, b] : cfg.tracking_windows)
    rec.metrics.emplace_back("tracking_rms_" + window_tag(a, b),
                             windowed_rms(rec.rows, a, b, cfg.period));

  // learned knowledge: replay the training path with the plant as it is at
  // the end of the run
  PendulumParams eval_plant = cfg.plant;
  if (cfg.duration >= cfg.perturb_time)
    eval_plant.half_length = cfg.perturbed_half_length;
  const std::vector<double> learned_errs =
      evaluate_learned(rec.final_weights, net, norm, path, cfg.duration,
                       cfg.period, eval_plant);
  rec.metrics.emplace_back("learned_rms_training_path", rms(learned_errs));
  for (const auto& [a, b] : cfg.learned_windows)
    rec.metrics.emplace_back("learned_rms_training_path_" + window_tag(a, b),
                             windowed_rms(learned_errs, a, b, cfg.period));

  if (cfg.experiment == ExperimentKind::CaseC) {
    // generalization: the near-space-filling spiral, fixed 100 s horizon
    const auto ergodic = make_trajectory(TrajectoryKind::CaseB, 0, 100.0);
    const std::vector<double> ergodic_errs =
        evaluate_learned(rec.final_weights, net, norm, ergodic, 100.0,
                         cfg.period, eval_plant);
    rec.metrics.emplace_back("learned_rms_ergodic_path", rms(ergodic_errs));

    const std::size_t count = ergodic_errs.size();
    const std::size_t base = count / 10;
    const std::size_t rem = count % 10;
    double seg_min = std::numeric_limits<double>::infinity();
    double seg_max = 0.0;
    std::size_t pos = 0;
    for (int seg = 0; seg < 10; ++seg) {
      const std::size_t len = base + (static_cast<std::size_t>(seg) < rem);
      std::vector<double> piece(ergodic_errs.begin() + pos,
                                ergodic_errs.begin() + pos + len);
      pos += len;
      const double seg_rms = rms(piece);
      rec.metrics.emplace_back(
          "learned_rms_ergodic_path_seg_" + std::to_string(seg + 1), seg_rms);
      seg_min = std::min(seg_min, seg_rms);
      seg_max = std::max(seg_max, seg_rms);
    }
    rec.metrics.emplace_back("learned_spread_ergodic_path",
                             seg_min > 0.0
                                 ? seg_max / seg_min
                                 : std::numeric_limits<double>::infinity());
  }

  for (std::size_t i = 0; i + 1 < rec.snapshots.size(); ++i) {
    const auto& a = rec.snapshots[i];
    const auto& b = rec.snapshots[i + 1];
    rec.metrics.emplace_back("weight_delta_" + window_tag(a.time, b.time),
                             (b.weights - a.weights).norm());
  }

  if (selective) {
    rec.metrics.emplace_back(
        "visited_partitions",
        static_cast<double>(selective->store().visited_count()));
    if (cfg.dump_store) {
      const auto& store = selective->store();
      rec.store_dump.reserve(static_cast<std::size_t>(store.total()));
      for (int j = 1; j <= store.total(); ++j) {
        const auto sample = store.lookup(j);
        rec.store_dump.push_back(
            {j, sample.input, sample.output, store.visited(j)});
      }
    }
  }

  if (curve) {
    rec.control_points = curve->control_points();
    rec.knots = curve->knots();
  }
  return rec;
}

}  // namespace smrls
