// end-to-end tests driving the installed binary; the harness passes its
// location as --cli-path=<path> ahead of the normal doctest options
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

std::string g_cli;

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "smrls_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_text(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return path.string();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

long count_lines(const std::string& text) {
  long n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args, const std::string& workdir = "") {
  static int call = 0;
  const auto out_file = scratch_dir() / ("stdout_" + std::to_string(call));
  const auto err_file = scratch_dir() / ("stderr_" + std::to_string(call));
  ++call;

  std::string cmd;
  if (!workdir.empty()) cmd += "cd '" + workdir + "' && ";
  cmd += "'" + g_cli + "' " + args + " > '" + out_file.string() + "' 2> '" +
         err_file.string() + "'";
  const int status = std::system(cmd.c_str());

  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_file);
  r.err = read_file(err_file);
  return r;
}

// short runs keep the suite fast; schedules shrink with the duration
std::string short_case_b(const std::string& trainer, const std::string& out,
                         double duration) {
  std::ostringstream cfg;
  cfg << "experiment = case_b\n"
      << "trainer = " << trainer << "\n"
      << "duration = " << duration << "\n"
      << "snapshots = " << duration << "\n"
      << "learned_windows = 0:" << duration << "\n"
      << "out_dir = " << out << "\n";
  return cfg.str();
}

std::string short_case_c(const std::string& out) {
  std::ostringstream cfg;
  cfg << "experiment = case_c\n"
      << "trainer = smrls\n"
      << "duration = 30\n"
      << "snapshots = 30\n"
      << "out_dir = " << out << "\n";
  return cfg.str();
}

}  // namespace

TEST_CASE("run writes the documented artifacts") {
  const auto out = (scratch_dir() / "artifacts").string();
  const auto cfg = write_text("artifacts.cfg", short_case_b("smrls", out, 2));

  const auto r = run_cli("run '" + cfg + "'");
  CHECK(r.code == 0);
  CHECK(r.out.find("-> " + out) != std::string::npos);

  const auto series = read_file(fs::path(out) / "timeseries.csv");
  CHECK(first_line(series) == "t,x1,x2,xbar1,xbar2,y,yhat,err,partition");
  CHECK(count_lines(series) == 201);  // header plus one row per step

  const auto weights = read_file(fs::path(out) / "weights.csv");
  CHECK(first_line(weights) == "t,w1,w2,w3,w4,w5,w6,w7,w8,w9");

  const auto summary = read_file(fs::path(out) / "summary.csv");
  CHECK(first_line(summary) == "metric,value");
  CHECK(summary.find("steps,200\n") != std::string::npos);
  CHECK(summary.find("tracking_rms_full,") != std::string::npos);
  CHECK(summary.find("learned_rms_training_path,") != std::string::npos);
  CHECK(summary.find("visited_partitions,") != std::string::npos);

  const auto resolved = read_file(fs::path(out) / "config_resolved.csv");
  CHECK(resolved.find("experiment = case_b\n") != std::string::npos);
  CHECK(resolved.find("trainer = smrls\n") != std::string::npos);

  CHECK(!fs::exists(fs::path(out) / "store.csv"));
  CHECK(!fs::exists(fs::path(out) / "control_points.csv"));
}

TEST_CASE("non selective runs have no partition data") {
  const auto out = (scratch_dir() / "plain_sgd").string();
  const auto cfg = write_text("plain_sgd.cfg", short_case_b("sgd", out, 1));

  const auto r = run_cli("run '" + cfg + "'");
  CHECK(r.code == 0);
  CHECK(first_line(read_file(fs::path(out) / "timeseries.csv")) ==
        "t,x1,x2,xbar1,xbar2,y,yhat,err");
  CHECK(read_file(fs::path(out) / "summary.csv").find("visited_partitions") ==
        std::string::npos);
}

TEST_CASE("reruns of one config are byte identical") {
  const auto out1 = (scratch_dir() / "repeat1").string();
  const auto out2 = (scratch_dir() / "repeat2").string();
  const auto cfg = write_text("repeat.cfg", short_case_c(out1));

  CHECK(run_cli("run '" + cfg + "'").code == 0);
  CHECK(run_cli("run '" + cfg + "' --out '" + out2 + "'").code == 0);

  for (const char* name :
       {"timeseries.csv", "weights.csv", "summary.csv", "control_points.csv"}) {
    CAPTURE(name);
    CHECK(read_file(fs::path(out1) / name) ==
          read_file(fs::path(out2) / name));
  }
  const auto points = read_file(fs::path(out1) / "control_points.csv");
  CHECK(first_line(points) == "index,x1,x2,knot");
  CHECK(count_lines(points) > 4);
}

TEST_CASE("the resolved echo reproduces the run") {
  const auto out1 = (scratch_dir() / "echo1").string();
  const auto out2 = (scratch_dir() / "echo2").string();
  const auto cfg = write_text("echo.cfg", short_case_c(out1));

  CHECK(run_cli("run '" + cfg + "'").code == 0);
  const auto echo = (fs::path(out1) / "config_resolved.csv").string();
  CHECK(run_cli("run '" + echo + "' --out '" + out2 + "'").code == 0);

  CHECK(read_file(fs::path(out1) / "timeseries.csv") ==
        read_file(fs::path(out2) / "timeseries.csv"));
  CHECK(read_file(fs::path(out1) / "summary.csv") ==
        read_file(fs::path(out2) / "summary.csv"));
}

TEST_CASE("seed override lands in the resolved echo") {
  const auto out = (scratch_dir() / "seeded").string();
  const auto cfg = write_text("seeded.cfg", short_case_c(out));

  CHECK(run_cli("run '" + cfg + "' --seed 5").code == 0);
  CHECK(read_file(fs::path(out) / "config_resolved.csv")
            .find("seed = 5\n") != std::string::npos);
}

TEST_CASE("dump flag writes the partition store") {
  const auto out = (scratch_dir() / "dumped").string();
  const auto cfg = write_text("dumped.cfg", short_case_b("smrls", out, 1));

  CHECK(run_cli("run '" + cfg + "' --dump-store").code == 0);
  const auto store = read_file(fs::path(out) / "store.csv");
  CHECK(first_line(store) == "partition,gamma1,gamma2,phi,visited");
  CHECK(count_lines(store) == 10001);  // header plus one row per partition
  CHECK(store.find(",1\n") != std::string::npos);  // at least one visited row
}

TEST_CASE("several configs run side by side") {
  const auto out1 = (scratch_dir() / "multi_sgd").string();
  const auto out2 = (scratch_dir() / "multi_smrls").string();
  const auto cfg1 = write_text("multi1.cfg", short_case_b("sgd", out1, 1));
  const auto cfg2 = write_text("multi2.cfg", short_case_b("smrls", out2, 1));

  const auto r = run_cli("run '" + cfg1 + "' '" + cfg2 + "'");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 2);
  CHECK(fs::exists(fs::path(out1) / "summary.csv"));
  CHECK(fs::exists(fs::path(out2) / "summary.csv"));

  // a shared output directory override would let the runs clobber each other
  const auto clash = run_cli("run '" + cfg1 + "' '" + cfg2 + "' --out '" +
                             (scratch_dir() / "clash").string() + "'");
  CHECK(clash.code == 2);
  CHECK(!clash.err.empty());
}

TEST_CASE("compare tabulates run summaries") {
  const auto out1 = (scratch_dir() / "cmp_smrls").string();
  const auto out2 = (scratch_dir() / "cmp_sgd").string();
  const auto cfg1 = write_text("cmp1.cfg", short_case_b("smrls", out1, 1));
  const auto cfg2 = write_text("cmp2.cfg", short_case_b("sgd", out2, 1));
  REQUIRE(run_cli("run '" + cfg1 + "' '" + cfg2 + "'").code == 0);

  const auto table = (scratch_dir() / "cmp.csv").string();
  const auto r = run_cli("compare '" + out1 + "' '" + out2 + "' --out '" +
                         table + "'");
  CHECK(r.code == 0);

  const auto csv = read_file(table);
  CHECK(csv == r.out);  // the table is echoed to stdout
  CHECK(first_line(csv).rfind("run,steps,", 0) == 0);
  CHECK(count_lines(csv) == 3);

  std::istringstream rows(csv);
  std::string header, row_smrls, row_sgd;
  std::getline(rows, header);
  std::getline(rows, row_smrls);
  std::getline(rows, row_sgd);
  CHECK(row_smrls.rfind("cmp_smrls,", 0) == 0);
  CHECK(row_sgd.rfind("cmp_sgd,", 0) == 0);
  // metric union: the sgd run has no partition count, so its cell is empty
  CHECK(header.find(",visited_partitions") != std::string::npos);
  CHECK(row_sgd.back() == ',');

  // default output name lands in the working directory
  const auto here = run_cli("compare '" + out1 + "'", scratch_dir().string());
  CHECK(here.code == 0);
  CHECK(fs::exists(scratch_dir() / "comparison.csv"));
}

TEST_CASE("failures use the documented exit codes") {
  // 2: config problems (absent file, bad value, bad usage)
  const auto missing = run_cli("run '" + (scratch_dir() / "nope.cfg").string() +
                               "'");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error") != std::string::npos);

  const auto bad_value = write_text("bad_value.cfg",
                                    "experiment = case_b\n"
                                    "trainer = smrls\n"
                                    "lambda = 1.5\n");
  CHECK(run_cli("run '" + bad_value + "'").code == 2);
  CHECK(run_cli("run --definitely-not-a-flag x").code == 2);
  CHECK(run_cli("").code == 2);  // a subcommand is required
  CHECK(run_cli("--help").code == 0);

  // 4: unwritable output location
  const auto blocker = write_text("blocker", "not a directory\n");
  const auto out = (scratch_dir() / "io_fail").string();
  const auto cfg = write_text("io_fail.cfg", short_case_b("smrls", out, 1));
  const auto io = run_cli("run '" + cfg + "' --out '" + blocker + "/sub'");
  CHECK(io.code == 4);

  // 4: compare against a directory with no summary
  CHECK(run_cli("compare '" + (scratch_dir() / "no_such_run").string() + "'")
            .code == 4);
}

int main(int argc, char** argv) {
  std::vector<char*> rest;
  const std::string prefix = "--cli-path=";
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind(prefix, 0) == 0)
      g_cli = arg.substr(prefix.size());
    else
      rest.push_back(argv[i]);
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli-path=<binary> [doctest args]\n");
    return 1;
  }

  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
