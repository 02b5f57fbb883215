#include "smrls/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "smrls/errors.hpp"
#include "smrls/experiment.hpp"
#include "smrls/input_space.hpp"

namespace smrls {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // \n line endings everywhere
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_timeseries_csv(const std::string& path, const RunRecord& record) {
  auto out = open_out(path);
  out << "t,x1,x2,xbar1,xbar2,y,yhat,err";
  if (record.has_partition) out << ",partition";
  out << '\n';
  for (const auto& r : record.rows) {
    out << format_double(r.t) << ',' << format_double(r.x1) << ','
        << format_double(r.x2) << ',' << format_double(r.xbar1) << ','
        << format_double(r.xbar2) << ',' << format_double(r.y) << ','
        << format_double(r.yhat) << ',' << format_double(r.err);
    if (record.has_partition) out << ',' << r.partition;
    out << '\n';
  }
  finish(out, path);
}

void write_weights_csv(const std::string& path, const RunRecord& record) {
  auto out = open_out(path);
  const long n =
      record.snapshots.empty() ? record.final_weights.size()
                               : record.snapshots.front().weights.size();
  out << "t";
  for (long i = 1; i <= n; ++i) out << ",w" << i;
  out << '\n';
  for (const auto& s : record.snapshots) {
    out << format_double(s.time);
    for (long i = 0; i < s.weights.size(); ++i)
      out << ',' << format_double(s.weights(i));
    out << '\n';
  }
  finish(out, path);
}

void write_summary_csv(const std::string& path, const RunRecord& record) {
  auto out = open_out(path);
  out << "metric,value\n";
  for (const auto& [name, value] : record.metrics)
    out << name << ',' << format_double(value) << '\n';
  finish(out, path);
}

void write_kv_file(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>&
                       entries) {
  auto out = open_out(path);
  for (const auto& [key, value] : entries) out << key << " = " << value << '\n';
  finish(out, path);
}

void write_store_csv(const std::string& path,
                     const std::vector<StoreDumpRow>& rows) {
  auto out = open_out(path);
  const int dim = rows.empty() ? 0 : static_cast<int>(rows.front().gamma.size());
  out << "partition";
  for (int d = 1; d <= dim; ++d) out << ",gamma" << d;
  out << ",phi,visited\n";
  for (const auto& r : rows) {
    out << r.partition;
    for (int d = 0; d < dim; ++d) out << ',' << format_double(r.gamma(d));
    out << ',' << format_double(r.phi) << ',' << (r.visited ? 1 : 0) << '\n';
  }
  finish(out, path);
}

void write_control_points_csv(const std::string& path,
                              const Eigen::MatrixXd& points,
                              const Eigen::VectorXd& knots) {
  auto out = open_out(path);
  out << "index,x1,x2,knot\n";
  for (long i = 0; i < points.rows(); ++i) {
    out << (i + 1) << ',' << format_double(points(i, 0)) << ','
        << format_double(points(i, 1)) << ',' << format_double(knots(i))
        << '\n';
  }
  finish(out, path);
}

std::vector<std::pair<std::string, std::string>> read_summary_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open summary file: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw IoError("malformed summary file: " + path);
    if (first) {
      first = false;
      if (line != "metric,value")
        throw IoError("malformed summary header: " + path);
      continue;
    }
    out.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  if (first) throw IoError("empty summary file: " + path);
  return out;
}

}  // namespace smrls
