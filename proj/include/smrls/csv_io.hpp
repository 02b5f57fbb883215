#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

namespace smrls {

struct RunRecord;
struct StoreDumpRow;

// Full-precision text form of a double (17 significant digits), so values
// survive a write/read round trip bit-exactly.
std::string format_double(double v);

void write_timeseries_csv(const std::string& path, const RunRecord& record);
void write_weights_csv(const std::string& path, const RunRecord& record);
void write_summary_csv(const std::string& path, const RunRecord& record);
void write_kv_file(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>&
                       entries);
void write_store_csv(const std::string& path,
                     const std::vector<StoreDumpRow>& rows);
void write_control_points_csv(const std::string& path,
                              const Eigen::MatrixXd& points,
                              const Eigen::VectorXd& knots);

// summary.csv reader used by compare; returns (metric, value-text) rows.
std::vector<std::pair<std::string, std::string>> read_summary_csv(
    const std::string& path);

}  // namespace smrls
