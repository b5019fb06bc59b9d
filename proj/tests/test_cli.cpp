// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "qperm/hadamard.hpp"
#include "qperm/matrix_io.hpp"
#include "qperm/permanent.hpp"

namespace qperm {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const Result r = run_cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

Complex value_of(const json& j) { return {j["value"][0].get<double>(), j["value"][1].get<double>()}; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qperm_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ComputeTwoByTwo) {
  const std::string m = write("m.json", R"({"n": 2, "rows": [[1, 2], [3, 4]]})");
  const json j = run_json({"compute", "--input", m, "--method", "ryser"});
  EXPECT_EQ(value_of(j), Complex(10.0));
  EXPECT_EQ(j["method"], "ryser");
  EXPECT_EQ(j["error_bound"], 0.0);
  EXPECT_EQ(j["wall_terms"], 3);
}

TEST_F(CliTest, ComputeIdentityWithEveryExactMethod) {
  const std::string m = write("i.json", format_matrix_json(SquareMatrix::identity(4)));
  for (const char* method : {"naive", "ryser", "glynn", "glynn_kan", "gapp", "operator_expectation"}) {
    const Complex v = value_of(run_json({"compute", "--input", m, "--method", method}));
    EXPECT_NEAR(v.real(), 1.0, 1e-12) << method;
    EXPECT_NEAR(v.imag(), 0.0, 1e-12) << method;
  }
}

TEST_F(CliTest, ComputeGurvitsWithinEnvelope) {
  const std::string m = write("j.json", format_matrix_json(SquareMatrix(4, std::vector<Complex>(16, 1.0))));
  const json j = run_json({"compute", "--input", m, "--method", "gurvits", "--samples", "100000", "--seed", "1"});
  EXPECT_LE(std::abs(value_of(j) - 24.0), j["error_bound"].get<double>());
  EXPECT_EQ(j["samples_used"], 100000);
}

TEST_F(CliTest, GeneratedMatrixRoundTripsBitExactly) {
  const std::string m = path("g.json");
  ASSERT_EQ(run_cli({"generate", "--n", "5", "--seed", "12", "--output", m}).code, 0);
  const SquareMatrix a = gaussian_ensemble(5, 1, 12).front();
  EXPECT_EQ(read_matrix_file(m), a);
  const json j = run_json({"compute", "--input", m, "--method", "glynn"});
  EXPECT_EQ(value_of(j), permanent_glynn(a).value);
  const std::string c = path("c.json");
  ASSERT_EQ(run_cli({"generate", "--n", "3", "--seed", "4", "--complex", "--output", c}).code, 0);
  EXPECT_FALSE(read_matrix_file(c).is_real());
}

TEST_F(CliTest, QuantumAutoStepWithRichardson) {
  const std::string m = path("r3.json");
  ASSERT_EQ(run_cli({"generate", "--n", "3", "--seed", "5", "--output", m}).code, 0);
  const Complex ref = value_of(run_json({"compute", "--input", m, "--method", "ryser"}));
  const json q = run_json({"quantum", "--input", m, "--mode", "exact", "--dt", "auto", "--richardson", "2"});
  const Complex est = value_of(q["estimate"]);
  EXPECT_LE(std::abs(est - ref), 1e-4 * std::abs(ref));
  EXPECT_TRUE(q["windows"]["exponential"].contains("empty"));
  EXPECT_TRUE(q["windows"]["gurvits"].contains("empty"));
  EXPECT_TRUE(q["budget"].contains("fd_bound"));
  EXPECT_TRUE(q["budget"].contains("power_bound"));
  EXPECT_FALSE(q.contains("overlaps"));
  const json v = run_json({"quantum", "--input", m, "--verbose"});
  EXPECT_EQ(v["overlaps"].size(), 2u);
  EXPECT_EQ(run_json({"quantum", "--input", m, "--no-halve"})["terms"], 4);
}

TEST_F(CliTest, QuantumShotsWithinHadamardBound) {
  const std::string m = path("s3.json");
  ASSERT_EQ(run_cli({"generate", "--n", "3", "--seed", "6", "--output", m}).code, 0);
  const json exact = run_json({"quantum", "--input", m, "--mode", "exact"});
  const Complex reference = value_of(exact["estimate"]);
  int within = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const json s = run_json({"quantum", "--input", m, "--mode", "shots", "--epsilon", "0.05", "--delta", "0.05",
                             "--seed", std::to_string(seed)});
    EXPECT_EQ(s["shots_per_overlap"], hoeffding_shots(0.05, 0.05));
    within += std::abs(value_of(s["estimate"]) - reference) <= s["budget"]["ht_bound"].get<double>() ? 1 : 0;
  }
  EXPECT_GE(within, 95);
}

TEST_F(CliTest, QuantumZeroMatrix) {
  const std::string m = write("z.json", format_matrix_json(SquareMatrix(3)));
  const json q = run_json({"quantum", "--input", m});
  EXPECT_LT(std::abs(value_of(q["estimate"])), 1e-9);
}

TEST_F(CliTest, QuantumRejectsDivergentStep) {
  const std::string m = write("m.json", R"({"n": 2, "rows": [[1, 2], [3, 4]]})");
  const Result r = run_cli({"quantum", "--input", m, "--dt", "1.0"});
  EXPECT_EQ(r.code, cli::kInvalidTimeStep);
  EXPECT_NE(r.err.find("--force"), std::string::npos);
  const json forced = run_json({"quantum", "--input", m, "--dt", "1.0", "--force"});
  EXPECT_TRUE(forced["budget"].is_null());
  EXPECT_EQ(run_cli({"quantum", "--input", m, "--dt", "fast"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"quantum", "--input", m, "--mode", "magic"}).code, cli::kParseError);
}

TEST_F(CliTest, ResourcesRows) {
  json r = run_json({"--format", "json", "resources", "--n", "3"});
  EXPECT_EQ(r["qubits"], 7);
  EXPECT_EQ(r["cnots_formula"], 42);
  EXPECT_EQ(r["cnots_measured"], 36);
  EXPECT_EQ(r["cnot_gap"], 6);
  EXPECT_EQ(run_json({"resources", "--n", "3", "--complex", "--format", "json"})["overlaps"], 10);
  r = run_json({"resources", "--n", "1", "--format", "json"});
  EXPECT_EQ(r["qubits"], 3);
  EXPECT_EQ(r["overlaps"], 1);
  const Result table = run_cli({"resources", "--n", "1", "--n-max", "4"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("2N"), std::string::npos);
  const Result csv = run_cli({"resources", "--n", "2", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("n,complex,overlaps", 0), 0u);
}

TEST_F(CliTest, AdvantageCsv) {
  const Result r = run_cli({"advantage", "--n-min", "2", "--n-max", "40"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "N,Q");
  std::map<int, double> q;
  double previous = -1.0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const int n = std::stoi(line.substr(0, comma));
    q[n] = std::stod(line.substr(comma + 1));
    EXPECT_GE(q[n], previous);
    previous = q[n];
  }
  EXPECT_EQ(q.at(7), 0.0);
  EXPECT_GT(q.at(8), 0.0);
  EXPECT_LT(q.at(27), 0.5);
  EXPECT_GT(q.at(28), 0.5);
  const Result e = run_cli({"advantage", "--n-min", "8", "--n-max", "9", "--ensemble", "50", "3"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.out.substr(0, e.out.find('\n')), "N,Q,case1,case2,case3,advantage");
  EXPECT_EQ(run_cli({"advantage", "--n-min", "1", "--n-max", "9"}).code, cli::kParseError);
}

TEST_F(CliTest, ManifestReplaysBitExactly) {
  const std::string m = path("r.json");
  ASSERT_EQ(run_cli({"generate", "--n", "3", "--seed", "8", "--output", m}).code, 0);
  const std::string manifest = path("run.json");
  const Result first = run_cli({"--manifest", manifest, "quantum", "--input", m, "--mode", "shots", "--shots", "500",
                                "--seed", "3", "--richardson", "1", "--threads", "2"});
  ASSERT_EQ(first.code, 0) << first.err;
  json recorded;
  std::ifstream(manifest) >> recorded;
  EXPECT_EQ(recorded["command"], "quantum");
  EXPECT_EQ(recorded["input_path"], m);
  EXPECT_EQ(recorded["config"]["shots_per_overlap"], 500);
  EXPECT_EQ(recorded["seed"], 3);
  EXPECT_EQ(recorded["threads"], 2);
  EXPECT_EQ(recorded["stdout"], first.out);
  const Result replay = run_cli({"replay", manifest});
  EXPECT_EQ(replay.code, 0) << replay.err;
  EXPECT_TRUE(json::parse(replay.out)["identical"].get<bool>());

  recorded["stdout"] = "tampered\n";
  std::ofstream(manifest) << recorded.dump();
  EXPECT_EQ(run_cli({"replay", manifest}).code, cli::kReplayMismatch);
}

TEST_F(CliTest, ParseErrorsNameTheRow) {
  const std::string bad = write("bad.json", R"({"n": 2, "rows": [[1, 2], [3]]})");
  const Result r = run_cli({"compute", "--input", bad});
  EXPECT_EQ(r.code, cli::kParseError);
  EXPECT_NE(r.err.find("row 1"), std::string::npos);
  EXPECT_EQ(run_cli({"compute", "--input", path("missing.json")}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"compute"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kParseError);
  const std::string m = write("m.json", R"({"n": 2, "rows": [[1, 2], [3, 4]]})");
  EXPECT_EQ(run_cli({"compute", "--input", m, "--method", "bogus"}).code, cli::kParseError);
}

TEST_F(CliTest, DimensionCapExitCode) {
  const std::string m = path("big.json");
  ASSERT_EQ(run_cli({"generate", "--n", "11", "--output", m}).code, 0);
  const Result r = run_cli({"compute", "--input", m, "--method", "naive"});
  EXPECT_EQ(r.code, cli::kDimensionCap);
}

TEST_F(CliTest, TableFormat) {
  const std::string m = write("m.json", R"({"n": 2, "rows": [[1, 2], [3, 4]]})");
  const Result r = run_cli({"--format", "table", "compute", "--input", m});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("method"), std::string::npos);
  EXPECT_NE(r.out.find("ryser"), std::string::npos);
}

int exit_status(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string exe = QPERM_CLI_PATH;
  const std::string good = write("m.json", R"({"n": 2, "rows": [[1, 2], [3, 4]]})");
  const std::string bad = write("bad.json", R"({"n": 2, "rows": [[1, "x"], [3, 4]]})");
  const std::string big = path("big.json");
  ASSERT_EQ(run_cli({"generate", "--n", "11", "--output", big}).code, 0);
  EXPECT_EQ(exit_status(exe + " compute --input " + good), 0);
  EXPECT_EQ(exit_status(exe + " compute --input " + bad), 1);
  EXPECT_EQ(exit_status(exe + " compute --method naive --input " + big), 2);
  EXPECT_EQ(exit_status(exe + " quantum --dt 3 --input " + good), 3);
  EXPECT_EQ(exit_status(exe + " --version"), 0);
}

}  // namespace
}  // namespace qperm
