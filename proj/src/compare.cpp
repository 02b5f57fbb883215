#include "smrls/compare.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include "smrls/csv_io.hpp"
#include "smrls/errors.hpp"

namespace smrls {

ComparisonTable build_comparison(const std::vector<std::string>& run_dirs) {
  if (run_dirs.empty()) throw ValidationError("no run directories given");

  ComparisonTable table;
  std::vector<std::map<std::string, std::string>> per_run;
  for (const auto& dir : run_dirs) {
    const auto entries =
        read_summary_csv((std::filesystem::path(dir) / "summary.csv").string());
    std::map<std::string, std::string> metrics;
    for (const auto& [name, value] : entries) {
      if (std::find(table.metric_names.begin(), table.metric_names.end(),
                    name) == table.metric_names.end())
        table.metric_names.push_back(name);
      metrics[name] = value;
    }
    per_run.push_back(std::move(metrics));

    auto base = std::filesystem::path(dir).filename().string();
    if (base.empty())  // trailing slash
      base = std::filesystem::path(dir).parent_path().filename().string();
    table.run_names.push_back(base.empty() ? dir : base);
  }

  for (const auto& metrics : per_run) {
    std::vector<std::string> row;
    row.reserve(table.metric_names.size());
    for (const auto& name : table.metric_names) {
      const auto it = metrics.find(name);
      row.push_back(it == metrics.end() ? std::string() : it->second);
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

std::string comparison_to_csv(const ComparisonTable& table) {
  std::string out = "run";
  for (const auto& name : table.metric_names) out += "," + name;
  out += '\n';
  for (std::size_t r = 0; r < table.run_names.size(); ++r) {
    out += table.run_names[r];
    for (const auto& cell : table.cells[r]) out += "," + cell;
    out += '\n';
  }
  return out;
}

void write_comparison_csv(const std::string& path,
                          const ComparisonTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << comparison_to_csv(table);
  out.flush();
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace smrls
