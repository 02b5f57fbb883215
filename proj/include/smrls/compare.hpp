#pragma once

#include <string>
#include <vector>

namespace smrls {

/**
 * Side-by-side view of several runs' summary metrics. Rows are runs,
 * columns are the union of metric names in first-seen order; a run
 * missing a metric gets an empty cell.
 */
struct ComparisonTable {
  std::vector<std::string> metric_names;
  std::vector<std::string> run_names;                // directory basenames
  std::vector<std::vector<std::string>> cells;       // run-major
};

ComparisonTable build_comparison(const std::vector<std::string>& run_dirs);

std::string comparison_to_csv(const ComparisonTable& table);

void write_comparison_csv(const std::string& path,
                          const ComparisonTable& table);

}  // namespace smrls
