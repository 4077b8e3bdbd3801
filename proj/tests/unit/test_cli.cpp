#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "asrc/builtin_scenarios.hpp"
#include "asrc_cli/commands.hpp"
#include "asrc_cli/manifest.hpp"
#include "asrc_cli/scenario_io.hpp"

namespace asrc::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("asrc_cli_" + std::to_string(::getpid()) + "_" +
                                                 std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path_ / name;
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

int shell(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_tool(const std::string& args) { return shell(std::string(ASRC_SIM_PATH) + " " + args); }

TEST(ScenarioIo, BuiltinsRoundTrip) {
  for (const auto& info : builtin_scenarios()) {
    const Scenario sc = builtin_scenario(info.name);
    const std::string once = serialize_scenario(sc);
    const Scenario parsed = parse_scenario(once);
    EXPECT_EQ(serialize_scenario(parsed), once) << info.name;
    EXPECT_EQ(parsed.config.omega, sc.config.omega);
    EXPECT_EQ(parsed.trajectory, sc.trajectory);
    EXPECT_EQ(parsed.plant.payload, sc.plant.payload);
  }
}

TEST(ScenarioIo, OverridesOnTopOfBase) {
  const std::string text = R"({
    // comments are allowed
    "base": "wmr-circle",
    "name": "short",
    "horizon_s": 2.5,
    "config": {"varpi": 0.3, "omega": [[2, 0], [0, 2]]},
    "plant": {"wmr": {"mass_kg": 10}}
  })";
  const Scenario sc = parse_scenario(text);
  EXPECT_EQ(sc.name, "short");
  EXPECT_EQ(sc.horizon, 2.5);
  EXPECT_EQ(sc.config.varpi, 0.3);
  EXPECT_EQ(sc.config.omega(1, 1), 2.0);
  EXPECT_EQ(sc.plant.wmr.mass, 10.0);
  EXPECT_EQ(sc.plant.wmr.inertia, 0.3);
  const Scenario again = parse_scenario(serialize_scenario(sc));
  EXPECT_EQ(serialize_scenario(again), serialize_scenario(sc));
}

TEST(ScenarioIo, SyntaxErrorReportsLine) {
  try {
    parse_scenario("{\n  \"name\": \"x\",\n  \"horizon_s\": ,\n}\n", "bad.json");
    FAIL();
  } catch (const ConfigFileError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.file(), "bad.json");
  }
}

TEST(ScenarioIo, FieldErrorsReportLineAndPath) {
  try {
    parse_scenario("{\n  \"config\": {\n    \"varpi\": \"wide\"\n  }\n}\n");
    FAIL();
  } catch (const ConfigFileError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.field(), "config.varpi");
  }
  try {
    parse_scenario("{\n  \"horizon\": 3\n}\n");
    FAIL();
  } catch (const ConfigFileError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.field(), "horizon");
  }
  EXPECT_THROW(parse_scenario(R"({"controller": "pid"})"), ConfigFileError);
  EXPECT_THROW(parse_scenario(R"({"base": "nope"})"), ConfigFileError);
  EXPECT_THROW(parse_scenario(R"({"config": {"omega": [[1, 0], [0]]}})"), ConfigFileError);
}

TEST(Manifest, ParsesSweepAndControllers) {
  const RunManifest m = parse_manifest(R"({
    "scenario": "wmr-circle", "output_dir": "out",
    "controllers": ["asrc", "asmc"],
    "sweep": {"parameter": "varpi", "values": [0.5, 0.3, 0.1]}
  })");
  EXPECT_EQ(m.controllers.size(), 2u);
  ASSERT_TRUE(m.sweep);
  EXPECT_EQ(m.sweep->values.size(), 3u);
}

TEST(Manifest, RejectsInvalidSweep) {
  try {
    parse_manifest("{\"scenario\": \"wmr-circle\", \"output_dir\": \"o\",\n"
                   " \"sweep\": {\"parameter\": \"varpi\",\n \"values\": [0.5, -1]}}");
    FAIL();
  } catch (const ConfigFileError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.field(), "sweep.values[1]");
  }
  EXPECT_THROW(parse_manifest(R"({"scenario": "wmr-circle", "output_dir": "o",
                                  "sweep": {"parameter": "mass", "values": [1]}})"),
               ConfigFileError);
  EXPECT_THROW(parse_manifest(R"({"scenario": "wmr-circle"})"), ConfigFileError);
}

TEST(Manifest, OutputRootOverride) {
  RunManifest m;
  m.output_dir = "runs/a";
  ::unsetenv(kOutputRootEnv);
  EXPECT_EQ(resolve_output_dir(m, "/base"), fs::path("/base/runs/a"));
  ::setenv(kOutputRootEnv, "/elsewhere", 1);
  EXPECT_EQ(resolve_output_dir(m, "/base"), fs::path("/elsewhere/runs/a"));
  m.output_dir = "/abs/b";
  EXPECT_EQ(resolve_output_dir(m, "/base"), fs::path("/elsewhere/b"));
  ::unsetenv(kOutputRootEnv);
  EXPECT_EQ(resolve_output_dir(m, "/base"), fs::path("/abs/b"));
}

TEST(Validate, ExitCodes) {
  TempDir dir;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_validate("wmr-circle", out, err), kExitOk);
  const fs::path at_beta = dir.write("b.json", R"({"base": "wmr-circle", "config": {"gamma_init": 0.1}})");
  EXPECT_EQ(cmd_validate(at_beta.string(), out, err), kExitViolations);
  EXPECT_NE(out.str().find("gamma"), std::string::npos);
  const fs::path neg = dir.write("n.json", R"({"base": "wmr-circle", "config": {"omega": [[1, 0], [0, -1]]}})");
  EXPECT_EQ(cmd_validate(neg.string(), out, err), kExitViolations);
  const fs::path broken = dir.write("x.json", "{\"base\": ");
  EXPECT_EQ(cmd_validate(broken.string(), out, err), kExitConfigError);
  EXPECT_EQ(cmd_validate((dir.path() / "missing.json").string(), out, err), kExitConfigError);
}

TEST(Run, WritesDocumentedOutputs) {
  TempDir dir;
  dir.write("short.json", R"({"base": "wmr-circle", "name": "short", "horizon_s": 2.0})");
  const fs::path manifest = dir.write("m.json", R"({
    "scenario": "short.json", "output_dir": "out", "controllers": ["asrc", "asmc"],
    "sweep": {"parameter": "varpi", "values": [0.5, 0.3]}
  })");
  ::unsetenv(kOutputRootEnv);
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(manifest, out, err), kExitOk) << err.str();

  const auto metrics = parse_csv(read(dir.path() / "out/metrics.csv"));
  ASSERT_EQ(metrics.size(), 5u);
  for (const auto& row : metrics) EXPECT_EQ(row.size(), metrics[0].size());
  EXPECT_EQ(metrics[1][0], "asrc__varpi_0.5");
  EXPECT_EQ(metrics[4][0], "asmc__varpi_0.3");
  EXPECT_TRUE(fs::exists(dir.path() / "out/summary.txt"));

  const fs::path run = dir.path() / "out/asrc__varpi_0.3";
  for (const char* f : {"trace.csv", "gains.csv", "series_e_f_norm.csv", "series_e_p.csv",
                        "series_rho_hat.csv", "scenario.json", "analysis.txt"})
    EXPECT_TRUE(fs::exists(run / f)) << f;
  const auto trace = parse_csv(read(run / "trace.csv"));
  ASSERT_EQ(trace.size(), 101u);  // header + 2 s / 20 ms
  for (std::size_t r = 1; r < trace.size(); ++r) {
    ASSERT_EQ(trace[r].size(), trace[0].size());
    EXPECT_NO_THROW((void)std::stod(trace[r][0]));
  }
  EXPECT_EQ(trace[0][0], "t_s");
  const auto gains = parse_csv(read(run / "gains.csv"));
  EXPECT_EQ(gains.size(), 101u);
  const Scenario replay = load_scenario(run / "scenario.json");
  EXPECT_EQ(replay.config.varpi, 0.3);
}

TEST(Run, DivergenceExitsThreeAndKeepsOutputs) {
  TempDir dir;
  dir.write("fast.json",
            R"({"base": "coriolis-track", "control_period_s": 0.05, "substeps": 1})");
  const fs::path manifest = dir.write("m.json", R"({"scenario": "fast.json", "output_dir": "out"})");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_run(manifest, out, err), kExitDiverged);
  EXPECT_TRUE(fs::exists(dir.path() / "out/asrc/trace.csv"));
  EXPECT_NE(read(dir.path() / "out/metrics.csv").find("diverged"), std::string::npos);
}

TEST(Run, ConfigErrorsExitTwo) {
  TempDir dir;
  std::ostringstream out, err;
  const fs::path bad = dir.write("m.json", "{\n \"scenario\": \"wmr-circle\",\n \"output_dir\": 3\n}\n");
  EXPECT_EQ(cmd_run(bad, out, err), kExitConfigError);
  EXPECT_NE(err.str().find(":3:"), std::string::npos) << err.str();
  const fs::path invalid = dir.write("v.json", R"({"base": "wmr-circle", "config": {"gamma_init": 0.05}})");
  const fs::path m2 = dir.write("m2.json", R"({"scenario": "v.json", "output_dir": "o"})");
  EXPECT_EQ(cmd_run(m2, out, err), kExitConfigError);
  EXPECT_EQ(cmd_run(dir.path() / "absent.json", out, err), kExitConfigError);
}

TEST(Binary, SubcommandsAndExitCodes) {
  TempDir dir;
  EXPECT_EQ(run_tool("list-scenarios"), 0);
  EXPECT_EQ(run_tool("validate wmr-circle"), 0);
  const fs::path bad = dir.write("b.json", R"({"base": "wmr-circle", "config": {"beta": 30}})");
  EXPECT_EQ(run_tool("validate " + bad.string()), 1);
  EXPECT_EQ(run_tool("run " + (dir.path() / "nope.json").string()), 2);
  EXPECT_EQ(run_tool("frobnicate"), 2);
  dir.write("s.json", R"({"base": "wmr-lowgain", "horizon_s": 1.0})");
  const fs::path m = dir.write("m.json", R"({"scenario": "s.json", "output_dir": "o"})");
  const fs::path root = dir.path() / "root";
  EXPECT_EQ(shell(std::string(kOutputRootEnv) + "=" + root.string() + " " + ASRC_SIM_PATH + " run " +
                  m.string()),
            0);
  EXPECT_TRUE(fs::exists(root / "o/metrics.csv"));
}

}  // namespace
}  // namespace asrc::cli
