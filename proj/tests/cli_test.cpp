// Copyright 2026 The sfc-design Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "sfc/mzn_export.hpp"
#include "sfc/solution.hpp"
#include "support.hpp"

namespace sfc::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kConstraintsWithoutConflict =
    R"([["s","WANA",1,2],["s","DPI",1,1],["d","VPN",1,1],["d","NAT",1,1]])";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("sfc_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    network = write("network.json", test::kThreeDomainNetwork);
    request = write("request.json", test::kRequestExample);
    constraints = write("constraints.json", test::kConstraintsExample);
    relaxed = write("relaxed.json", kConstraintsWithoutConflict);
  }
  void TearDown() override { fs::remove_all(dir); }

  fs::path write(const std::string& name, std::string_view text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
  }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  int invoke(std::vector<std::string> args) {
    out.str("");
    err.str("");
    args.insert(args.begin(), "sfc-design");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
  }

  fs::path dir, network, request, constraints, relaxed;
  std::ostringstream out, err;
};

TEST(ParseDuration, Units) {
  EXPECT_EQ(parse_duration("5s"), Budget{5000});
  EXPECT_EQ(parse_duration("500ms"), Budget{500});
  EXPECT_EQ(parse_duration("2m"), Budget{120000});
  EXPECT_EQ(parse_duration("1.5"), Budget{1500});
  EXPECT_FALSE(parse_duration(""));
  EXPECT_FALSE(parse_duration("0s"));
  EXPECT_FALSE(parse_duration("-1"));
  EXPECT_FALSE(parse_duration("fast"));
}

TEST_F(CliTest, SolveOptimal) {
  const fs::path sol = dir / "sol.json";
  EXPECT_EQ(invoke({"solve", network.string(), request.string(), relaxed.string(), "--optimal", "--timeout", "5s",
                    "--out", sol.string()}),
            kSuccess)
      << err.str();
  const SfcTree t = tree_from_json(slurp(sol));
  EXPECT_EQ(tree_cost(t), 7);
  EXPECT_NE(out.str().find("\"optimal\""), std::string::npos);
}

TEST_F(CliTest, SolveFeasibleMode) {
  EXPECT_EQ(invoke({"solve", network.string(), request.string(), relaxed.string(), "--feasible"}), kSuccess);
  EXPECT_NE(out.str().find("\"feasible\""), std::string::npos);
  EXPECT_NE(invoke({"solve", network.string(), request.string(), "--feasible", "--optimal"}), kSuccess);
}

TEST_F(CliTest, SolveUnsatWithExampleConstraints) {
  EXPECT_EQ(invoke({"solve", network.string(), request.string(), constraints.string()}), kUnsat);
  EXPECT_NE(err.str().find("no admissible"), std::string::npos);
  EXPECT_NE(out.str().find("\"unsat\""), std::string::npos);
}

TEST_F(CliTest, SolveInputErrors) {
  EXPECT_EQ(invoke({"solve", (dir / "nope.json").string(), request.string()}), kInputError);
  const fs::path bad = write("bad.json", R"({"src":"s"})");
  EXPECT_EQ(invoke({"solve", network.string(), bad.string()}), kInputError);
  EXPECT_EQ(invoke({"solve", network.string(), request.string(), "--timeout", "soon"}), kInputError);
  const fs::path unknown = write("unknown.json", R"([["zz","VPN",0,1]])");
  EXPECT_EQ(invoke({"solve", network.string(), request.string(), unknown.string()}), kInputError);
  EXPECT_NE(err.str().find("zz"), std::string::npos);
}

TEST_F(CliTest, CheckAcceptsSolvedTree) {
  const fs::path sol = dir / "sol.json";
  ASSERT_EQ(invoke({"solve", network.string(), request.string(), relaxed.string(), "--out", sol.string()}), kSuccess);
  EXPECT_EQ(invoke({"check", network.string(), request.string(), relaxed.string(), sol.string()}), kSuccess);
  EXPECT_EQ(out.str(), "admissible, cost 7\n");
}

TEST_F(CliTest, CheckNamesViolatedCondition) {
  const fs::path sol = dir / "sol.json";
  ASSERT_EQ(invoke({"solve", network.string(), request.string(), relaxed.string(), "--out", sol.string()}), kSuccess);
  // The solved tree has one VPN in s, below the min of the full set.
  EXPECT_EQ(invoke({"check", network.string(), request.string(), constraints.string(), sol.string()}), kUnsat);
  EXPECT_NE(out.str().find("condition v"), std::string::npos) << out.str();
}

TEST_F(CliTest, CheckInputErrors) {
  const fs::path junk = write("junk.json", "[1,2");
  EXPECT_EQ(invoke({"check", network.string(), request.string(), relaxed.string(), junk.string()}), kInputError);
  EXPECT_EQ(invoke({"check", network.string(), request.string()}), kInputError);
}

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(invoke({"gen", "--nodes", "40", "--domains", "4", "--seed", "9"}), kSuccess);
  const std::string first = out.str();
  ASSERT_EQ(invoke({"gen", "--nodes", "40", "--domains", "4", "--seed", "9"}), kSuccess);
  EXPECT_EQ(out.str(), first);
  const NetworkDocument doc = parse_network(first);
  EXPECT_EQ(doc.graph.node_count(), 40);
  const fs::path file = dir / "net.json";
  ASSERT_EQ(invoke({"gen", "--nodes", "40", "--domains", "4", "--seed", "9", "--out", file.string()}), kSuccess);
  EXPECT_EQ(slurp(file), first);
}

TEST_F(CliTest, GenRejectsDenseDomains) {
  EXPECT_EQ(invoke({"gen", "--nodes", "5", "--domains", "3", "--seed", "1"}), kInputError);
}

TEST_F(CliTest, BenchWritesCsv) {
  const fs::path cfg = write(
      "bench.json",
      R"({"dimensions":[{"nodes":30,"domains":3}],"scenarios_per_dimension":2,"requests_per_scenario":2,"cutoff_ms":2000})");
  const fs::path out_dir = dir / "results";
  EXPECT_EQ(invoke({"bench", cfg.string(), "--out-dir", out_dir.string()}), kSuccess) << err.str();
  EXPECT_TRUE(fs::exists(out_dir / "runs.csv"));
  EXPECT_TRUE(fs::exists(out_dir / "aggregates.csv"));
  EXPECT_NE(out.str().find("30 nodes / 3 domains: 4 runs"), std::string::npos) << out.str();
}

TEST_F(CliTest, BenchRejectsBadConfig) {
  const fs::path bad = write("bad.json", R"({"dimensions":[{"nodes":5,"domains":3}]})");
  EXPECT_EQ(invoke({"bench", bad.string(), "--out-dir", dir.string()}), kInputError);
  const fs::path none = write("none.json", R"({"dimensions":[]})");
  EXPECT_EQ(invoke({"bench", none.string(), "--out-dir", dir.string()}), kInputError);
  EXPECT_FALSE(fs::exists(dir / "runs.csv"));
}

TEST_F(CliTest, ExportWritesModelAndData) {
  const fs::path out_dir = dir / "mzn";
  fs::create_directories(out_dir);
  EXPECT_EQ(invoke({"export", network.string(), request.string(), constraints.string(), "--out-dir", out_dir.string()}),
            kSuccess)
      << err.str();
  const DznData d = parse_dzn(slurp(out_dir / "instance.dzn"));
  EXPECT_EQ(d.at("n_dcons").scalar(), 5);
  EXPECT_NE(slurp(out_dir / "instance.mzn").find("solve minimize"), std::string::npos);
  EXPECT_EQ(invoke({"export", network.string(), (dir / "missing.json").string(), "--out-dir", out_dir.string()}),
            kInputError);
}

TEST_F(CliTest, RequiresSubcommand) { EXPECT_EQ(invoke({}), kInputError); }

}  // namespace
}  // namespace sfc::cli
