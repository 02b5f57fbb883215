#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "smrls/compare.hpp"
#include "smrls/config.hpp"
#include "smrls/csv_io.hpp"
#include "smrls/errors.hpp"
#include "smrls/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitTrainer = 3;
constexpr int kExitIo = 4;

int classify(const std::exception& e) {
  if (dynamic_cast<const smrls::ConfigError*>(&e)) return kExitConfig;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitConfig;
  if (dynamic_cast<const smrls::IoError*>(&e)) return kExitIo;
  return kExitTrainer;
}

int run_one(const std::string& config_path,
            const std::optional<std::string>& out_override,
            const std::optional<std::uint64_t>& seed_override,
            bool dump_store, std::string& message) {
  try {
    smrls::ExperimentConfig cfg = smrls::parse_config(config_path);
    if (out_override) cfg.out_dir = *out_override;
    if (seed_override) cfg.seed = *seed_override;
    if (dump_store) cfg.dump_store = true;
    smrls::validate_config(cfg);

    namespace fs = std::filesystem;
    const fs::path dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
      throw smrls::IoError("cannot create output directory: " +
                           dir.string() + ": " + ec.message());

    const smrls::RunRecord rec = smrls::run_experiment(cfg);

    smrls::write_timeseries_csv((dir / "timeseries.csv").string(), rec);
    smrls::write_weights_csv((dir / "weights.csv").string(), rec);
    smrls::write_summary_csv((dir / "summary.csv").string(), rec);
    smrls::write_kv_file((dir / "config_resolved.csv").string(),
                         smrls::resolved_entries(cfg));
    if (!rec.store_dump.empty())
      smrls::write_store_csv((dir / "store.csv").string(), rec.store_dump);
    if (rec.control_points)
      smrls::write_control_points_csv((dir / "control_points.csv").string(),
                                      *rec.control_points, *rec.knots);

    message = config_path + " -> " + dir.string();
    return kExitOk;
  } catch (const std::exception& e) {
    message = config_path + ": error: " + e.what();
    return classify(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RBF network real-time training harness"};
  app.require_subcommand(1);

  std::vector<std::string> config_paths;
  std::string run_out;
  std::uint64_t seed_value = 0;
  bool dump_store = false;
  auto* run_cmd =
      app.add_subcommand("run", "run experiments from config files");
  run_cmd->add_option("config", config_paths, "config file path(s)")
      ->required();
  auto* out_opt =
      run_cmd->add_option("--out", run_out, "output directory override");
  auto* seed_opt =
      run_cmd->add_option("--seed", seed_value, "random seed override");
  run_cmd->add_flag("--dump-store", dump_store,
                    "write the partition store next to the outputs");

  std::vector<std::string> compare_dirs;
  std::string compare_out = "comparison.csv";
  auto* compare_cmd =
      app.add_subcommand("compare", "tabulate summary metrics of runs");
  compare_cmd->add_option("dirs", compare_dirs, "run output directories")
      ->required();
  compare_cmd->add_option("--out", compare_out, "comparison file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (run_cmd->parsed()) {
    if (!out_opt->empty() && config_paths.size() > 1) {
      std::cerr << "error: --out cannot be shared by multiple configs\n";
      return kExitConfig;
    }
    const std::optional<std::string> out_override =
        out_opt->empty() ? std::nullopt : std::optional(run_out);
    const std::optional<std::uint64_t> seed_override =
        seed_opt->empty() ? std::nullopt : std::optional(seed_value);

    // independent runs, one worker each
    std::vector<std::string> messages(config_paths.size());
    std::vector<std::future<int>> results;
    results.reserve(config_paths.size());
    for (std::size_t i = 0; i < config_paths.size(); ++i) {
      results.push_back(std::async(
          config_paths.size() > 1 ? std::launch::async
                                  : std::launch::deferred,
          run_one, config_paths[i], out_override, seed_override, dump_store,
          std::ref(messages[i])));
    }
    int exit_code = kExitOk;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const int code = results[i].get();
      if (code == kExitOk)
        std::cout << messages[i] << '\n';
      else
        std::cerr << messages[i] << '\n';
      if (code != kExitOk && exit_code == kExitOk) exit_code = code;
    }
    return exit_code;
  }

  try {
    const auto table = smrls::build_comparison(compare_dirs);
    smrls::write_comparison_csv(compare_out, table);
    std::cout << smrls::comparison_to_csv(table);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return classify(e);
  }
}
