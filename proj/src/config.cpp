#include "smrls/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "smrls/csv_io.hpp"
#include "smrls/errors.hpp"
#include "smrls/input_space.hpp"

namespace smrls {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("key '" + key + "': not a number: '" + value + "'");
  }
}

long parse_integer(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("key '" + key + "': not an integer: '" + value +
                          "'");
  }
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("key '" + key + "': not an integer: '" + value +
                          "'");
  }
}

bool parse_flag(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true") return true;
  if (value == "0" || value == "false") return false;
  throw ValidationError("key '" + key + "': expected 0/1, got '" + value +
                        "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<double> parse_real_list(const std::string& key,
                                    const std::string& value) {
  std::vector<double> out;
  if (trim(value).empty()) return out;
  for (const auto& item : split(value, ','))
    out.push_back(parse_real(key, item));
  return out;
}

std::vector<std::pair<double, double>> parse_window_list(
    const std::string& key, const std::string& value) {
  std::vector<std::pair<double, double>> out;
  if (trim(value).empty()) return out;
  for (const auto& item : split(value, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ValidationError("key '" + key + "': expected a:b, got '" + item +
                            "'");
    out.emplace_back(parse_real(key, trim(item.substr(0, colon))),
                     parse_real(key, trim(item.substr(colon + 1))));
  }
  return out;
}

ExperimentKind parse_experiment(const std::string& value) {
  if (value == "case_a") return ExperimentKind::CaseA;
  if (value == "case_b") return ExperimentKind::CaseB;
  if (value == "case_c") return ExperimentKind::CaseC;
  if (value == "global_rbf") return ExperimentKind::GlobalRbf;
  if (value == "custom") return ExperimentKind::Custom;
  throw ValidationError("key 'experiment': unknown value '" + value + "'");
}

TrainerKind parse_trainer(const std::string& value) {
  if (value == "sgd") return TrainerKind::Sgd;
  if (value == "rls") return TrainerKind::Rls;
  if (value == "ffrls") return TrainerKind::Ffrls;
  if (value == "smrls") return TrainerKind::Smrls;
  throw ValidationError("key 'trainer': unknown value '" + value + "'");
}

TrajectoryKind parse_trajectory(const std::string& value) {
  if (value == "case_a") return TrajectoryKind::CaseA;
  if (value == "case_b") return TrajectoryKind::CaseB;
  // the ergodic evaluation path is case B's curve
  if (value == "ergodic_eval") return TrajectoryKind::CaseB;
  if (value == "case_c") return TrajectoryKind::CaseC;
  throw ValidationError("key 'trajectory': unknown value '" + value + "'");
}

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string join_windows(const std::vector<std::pair<double, double>>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ',';
    out += format_double(ws[i].first) + ":" + format_double(ws[i].second);
  }
  return out;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::CaseA: return "case_a";
    case ExperimentKind::CaseB: return "case_b";
    case ExperimentKind::CaseC: return "case_c";
    case ExperimentKind::GlobalRbf: return "global_rbf";
    case ExperimentKind::Custom: return "custom";
  }
  return "?";
}

std::string to_string(TrainerKind kind) {
  switch (kind) {
    case TrainerKind::Sgd: return "sgd";
    case TrainerKind::Rls: return "rls";
    case TrainerKind::Ffrls: return "ffrls";
    case TrainerKind::Smrls: return "smrls";
  }
  return "?";
}

std::string to_string(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::CaseA: return "case_a";
    case TrajectoryKind::CaseB: return "case_b";
    case TrajectoryKind::CaseC: return "case_c";
  }
  return "?";
}

ExperimentConfig default_config(ExperimentKind experiment,
                                TrainerKind trainer) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  cfg.trainer = trainer;
  switch (experiment) {
    case ExperimentKind::CaseA:
      cfg.trajectory = TrajectoryKind::CaseA;
      cfg.duration = 100.0;
      cfg.perturb_time = 50.0;
      cfg.snapshots = {52.0, 60.0, 75.0, 100.0};
      cfg.tracking_windows = {{55.0, 100.0}};
      break;
    case ExperimentKind::CaseB:
      cfg.trajectory = TrajectoryKind::CaseB;
      cfg.duration = 100.0;
      cfg.snapshots = {100.0};
      cfg.learned_windows = {{0.0, 90.0}};
      break;
    case ExperimentKind::CaseC:
      cfg.trajectory = TrajectoryKind::CaseC;
      cfg.duration = 300.0;
      cfg.snapshots = {300.0};
      break;
    case ExperimentKind::GlobalRbf:
      cfg.trajectory = TrajectoryKind::CaseB;
      cfg.duration = 100.0;
      cfg.width = 2.0;
      cfg.snapshots = {100.0};
      cfg.learned_windows = {{0.0, 90.0}};
      break;
    case ExperimentKind::Custom:
      cfg.trajectory = TrajectoryKind::CaseB;
      cfg.duration = 100.0;
      cfg.snapshots = {100.0};
      break;
  }
  return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.neurons_per_dim < 1)
    throw ValidationError("key 'neurons_per_dim': must be >= 1");
  if (cfg.dimension != 2)
    throw ValidationError(
        "key 'dimension': the pendulum benchmark is two dimensional");
  if (!(cfg.width > 0.0)) throw ValidationError("key 'width': must be > 0");
  if (cfg.partitions_per_dim < 1)
    throw ValidationError("key 'partitions_per_dim': must be >= 1");
  if (!(cfg.eta > 0.0)) throw ValidationError("key 'eta': must be > 0");
  if (!(cfg.lambda > 0.0) || cfg.lambda > 1.0)
    throw ValidationError("key 'lambda': must lie in (0, 1]");
  if (!(cfg.p0_scale > 0.0))
    throw ValidationError("key 'p0_scale': must be > 0");
  if (!(cfg.plant.gravity > 0.0))
    throw ValidationError("key 'gravity': must be > 0");
  if (!(cfg.plant.cart_mass > 0.0))
    throw ValidationError("key 'cart_mass': must be > 0");
  if (!(cfg.plant.pendulum_mass > 0.0))
    throw ValidationError("key 'pendulum_mass': must be > 0");
  if (!(cfg.plant.half_length > 0.0))
    throw ValidationError("key 'half_length': must be > 0");
  if (cfg.plant.pendulum_mass >=
      (4.0 / 3.0) * (cfg.plant.cart_mass + cfg.plant.pendulum_mass))
    throw ValidationError(
        "key 'pendulum_mass': plant denominator loses positivity");
  if (!(cfg.perturbed_half_length > 0.0))
    throw ValidationError("key 'perturbed_half_length': must be > 0");
  if (std::isnan(cfg.perturb_time) || cfg.perturb_time < 0.0)
    throw ValidationError("key 'perturb_time': must be >= 0");
  if (!(cfg.duration > 0.0))
    throw ValidationError("key 'duration': must be > 0");
  if (!(cfg.period > 0.0)) throw ValidationError("key 'period': must be > 0");

  const double ratio = cfg.duration / cfg.period;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * ratio)
    throw ValidationError("key 'period': must divide duration");

  for (double s : cfg.snapshots) {
    if (!(s > 0.0) || s > cfg.duration + 1e-9)
      throw ValidationError("key 'snapshots': times must lie in (0, duration]");
  }
  for (const auto& [a, b] : cfg.tracking_windows) {
    if (a < 0.0 || !(b > a) || b > cfg.duration + 1e-9)
      throw ValidationError("key 'tracking_windows': need 0 <= a < b <= duration");
  }
  for (const auto& [a, b] : cfg.learned_windows) {
    if (a < 0.0 || !(b > a))
      throw ValidationError("key 'learned_windows': need 0 <= a < b");
  }
  if (static_cast<int>(cfg.bounds_min.size()) != cfg.dimension ||
      static_cast<int>(cfg.bounds_max.size()) != cfg.dimension)
    throw ValidationError("key 'bounds_min'/'bounds_max': need one value per dimension");
  for (int i = 0; i < cfg.dimension; ++i) {
    if (!(cfg.bounds_max[i] > cfg.bounds_min[i]))
      throw ValidationError("key 'bounds_max': must exceed bounds_min per axis");
  }
  if (cfg.out_dir.empty()) throw ValidationError("key 'out_dir': must be non-empty");

  // named experiments pin their trajectory
  if (cfg.experiment != ExperimentKind::Custom &&
      cfg.trajectory != default_config(cfg.experiment, cfg.trainer).trajectory)
    throw ValidationError("key 'trajectory': fixed for named experiments");
}

long config_steps(const ExperimentConfig& cfg) {
  return std::lround(cfg.duration / cfg.period);
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("cannot open config file: " + path);

  std::map<std::string, std::string> kv;
  std::vector<std::string> order;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto sep = line.find('=');
    if (sep == std::string::npos)
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected key = value");
    const std::string key = trim(line.substr(0, sep));
    const std::string value = trim(line.substr(sep + 1));
    if (key.empty())
      throw ParseError(path + ":" + std::to_string(line_no) + ": empty key");
    if (!kv.count(key)) order.push_back(key);
    kv[key] = value;  // last assignment wins
  }
  if (in.bad()) throw IoError("read failure on config file: " + path);

  if (!kv.count("experiment"))
    throw ValidationError("missing required key 'experiment'");
  if (!kv.count("trainer"))
    throw ValidationError("missing required key 'trainer'");

  ExperimentConfig cfg = default_config(parse_experiment(kv["experiment"]),
                                        parse_trainer(kv["trainer"]));

  for (const auto& key : order) {
    const std::string& value = kv[key];
    if (key == "experiment" || key == "trainer") continue;
    if (key == "trajectory") cfg.trajectory = parse_trajectory(value);
    else if (key == "neurons_per_dim")
      cfg.neurons_per_dim = static_cast<int>(parse_integer(key, value));
    else if (key == "dimension")
      cfg.dimension = static_cast<int>(parse_integer(key, value));
    else if (key == "width") cfg.width = parse_real(key, value);
    else if (key == "partitions_per_dim")
      cfg.partitions_per_dim = static_cast<int>(parse_integer(key, value));
    else if (key == "eta") cfg.eta = parse_real(key, value);
    else if (key == "lambda") cfg.lambda = parse_real(key, value);
    else if (key == "p0_scale") cfg.p0_scale = parse_real(key, value);
    else if (key == "w0") cfg.w0 = parse_real(key, value);
    else if (key == "gravity") cfg.plant.gravity = parse_real(key, value);
    else if (key == "cart_mass") cfg.plant.cart_mass = parse_real(key, value);
    else if (key == "pendulum_mass")
      cfg.plant.pendulum_mass = parse_real(key, value);
    else if (key == "half_length")
      cfg.plant.half_length = parse_real(key, value);
    else if (key == "perturb_time")
      cfg.perturb_time = parse_real(key, value);
    else if (key == "perturbed_half_length")
      cfg.perturbed_half_length = parse_real(key, value);
    else if (key == "duration") cfg.duration = parse_real(key, value);
    else if (key == "period") cfg.period = parse_real(key, value);
    else if (key == "snapshots") cfg.snapshots = parse_real_list(key, value);
    else if (key == "tracking_windows")
      cfg.tracking_windows = parse_window_list(key, value);
    else if (key == "learned_windows")
      cfg.learned_windows = parse_window_list(key, value);
    else if (key == "bounds_min") cfg.bounds_min = parse_real_list(key, value);
    else if (key == "bounds_max") cfg.bounds_max = parse_real_list(key, value);
    else if (key == "seed") cfg.seed = parse_seed(key, value);
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "dump_store") cfg.dump_store = parse_flag(key, value);
    else
      throw ValidationError("unknown key '" + key + "'");
  }

  validate_config(cfg);
  return cfg;
}

std::vector<std::pair<std::string, std::string>> resolved_entries(
    const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("experiment", to_string(cfg.experiment));
  out.emplace_back("trainer", to_string(cfg.trainer));
  out.emplace_back("trajectory", to_string(cfg.trajectory));
  out.emplace_back("neurons_per_dim", std::to_string(cfg.neurons_per_dim));
  out.emplace_back("dimension", std::to_string(cfg.dimension));
  out.emplace_back("width", format_double(cfg.width));
  out.emplace_back("partitions_per_dim",
                   std::to_string(cfg.partitions_per_dim));
  out.emplace_back("eta", format_double(cfg.eta));
  out.emplace_back("lambda", format_double(cfg.lambda));
  out.emplace_back("p0_scale", format_double(cfg.p0_scale));
  out.emplace_back("w0", format_double(cfg.w0));
  out.emplace_back("gravity", format_double(cfg.plant.gravity));
  out.emplace_back("cart_mass", format_double(cfg.plant.cart_mass));
  out.emplace_back("pendulum_mass", format_double(cfg.plant.pendulum_mass));
  out.emplace_back("half_length", format_double(cfg.plant.half_length));
  out.emplace_back("perturb_time", format_double(cfg.perturb_time));
  out.emplace_back("perturbed_half_length",
                   format_double(cfg.perturbed_half_length));
  out.emplace_back("duration", format_double(cfg.duration));
  out.emplace_back("period", format_double(cfg.period));
  out.emplace_back("snapshots", join_reals(cfg.snapshots));
  out.emplace_back("tracking_windows", join_windows(cfg.tracking_windows));
  out.emplace_back("learned_windows", join_windows(cfg.learned_windows));
  out.emplace_back("bounds_min", join_reals(cfg.bounds_min));
  out.emplace_back("bounds_max", join_reals(cfg.bounds_max));
  out.emplace_back("seed", std::to_string(cfg.seed));
  out.emplace_back("out_dir", cfg.out_dir);
  out.emplace_back("dump_store", cfg.dump_store ? "1" : "0");
  return out;
}

}  // namespace smrls
