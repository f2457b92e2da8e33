// Copyright 2026 The swarmpath Authors.
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace swarmpath::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kScenarios = fs::path(SWARMPATH_SOURCE_DIR) / "scenarios";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swarmpath_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return path(name);
  }
  fs::path dir_;
};

const char* kSmallTrain[] = {"--samples", "300", "--hidden", "3", "--epochs", "3", "--seed", "5"};

TEST_F(CliTest, HelpAndUnknownCommand) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"train", "--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST_F(CliTest, TrainRejectsZeroSamples) {
  const auto r = invoke({"train", "--scenario", (kScenarios / "ten_agents.json").string(), "--samples", "0",
                         "--out", path("w.json")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(fs::exists(path("w.json")));
}

TEST_F(CliTest, TrainIsReproducible) {
  std::vector<std::string> base{"train", "--scenario", (kScenarios / "ten_agents.json").string()};
  base.insert(base.end(), std::begin(kSmallTrain), std::end(kSmallTrain));
  base.insert(base.end(), {"--out", path("a.json")});
  const auto ra = invoke(base);
  ASSERT_EQ(ra.code, kExitOk) << ra.err;
  const std::string first = file_hash(path("a.json"));
  ASSERT_EQ(invoke(base).code, kExitOk);
  EXPECT_EQ(file_hash(path("a.json")), first);
  EXPECT_NE(ra.out.find("test MSE"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("a.json.manifest.json")));
}

TEST_F(CliTest, SimulateWritesTraceSummaryAndJson) {
  const auto r = invoke({"simulate", "--scenario", (kScenarios / "pursuit.json").string(), "--zero-net",
                         "--trace", path("t.jsonl"), "--summary", path("s.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(path("t.jsonl")));
  EXPECT_TRUE(fs::exists(path("s.json")));
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_NE(r.out.find("\"complete\""), std::string::npos);
}

TEST_F(CliTest, SimulateCaseTwoDeadReckoning) {
  const auto r = invoke({"simulate", "--scenario", (kScenarios / "ten_agents.json").string(), "--zero-net",
                         "--case", "2", "--resync", "0", "--ticks-max", "20"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST_F(CliTest, SimulateRejectsMismatchedWeights) {
  std::vector<std::string> args{"train", "--scenario", (kScenarios / "pursuit.json").string()};
  args.insert(args.end(), std::begin(kSmallTrain), std::end(kSmallTrain));
  args.insert(args.end(), {"--out", path("w.json")});
  ASSERT_EQ(invoke(args).code, kExitOk);
  const auto r = invoke({"simulate", "--scenario", (kScenarios / "ten_agents.json").string(), "--weights",
                         path("w.json")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("input_dim"), std::string::npos);
}

TEST_F(CliTest, SimulateNeedsANetwork) {
  EXPECT_EQ(invoke({"simulate", "--scenario", (kScenarios / "pursuit.json").string()}).code, kExitUsage);
}

TEST_F(CliTest, CompareAggregatesSeeds) {
  const auto r = invoke({"compare", "--scenario", (kScenarios / "ten_agents.json").string(), "--zero-net",
                         "--seeds", "3", "--ticks-max", "50", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"rows\""), std::string::npos);
}

TEST_F(CliTest, CertifyZeroNetHoldsAndVerifies) {
  const auto r = invoke({"certify", "--scenario", (kScenarios / "pursuit.json").string(), "--zero-net",
                         "--verify", "--strict"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST_F(CliTest, CertifyStrictFailsOnFastTargets) {
  const auto scenario = write("fast.json", R"({
  "params": {"region_half_extent": 5.0, "n_agents": 1, "n_radar_missiles": 0, "n_targets": 1,
             "target_max_speed": 0.05},
  "agents": [{"x": 1.0, "y": 1.0, "vx": 0.06, "vy": 0.0}],
  "targets": [{"x": 4.0, "y": 1.0}],
  "radar_missiles": []
})");
  EXPECT_EQ(invoke({"certify", "--scenario", scenario, "--zero-net"}).code, kExitOk);
  EXPECT_EQ(invoke({"certify", "--scenario", scenario, "--zero-net", "--strict"}).code, kExitStrictFailure);
}

TEST_F(CliTest, MalformedScenarioIsUsageError) {
  const auto scenario = write("bad.json", "{ not json");
  EXPECT_EQ(invoke({"certify", "--scenario", scenario, "--zero-net"}).code, kExitUsage);
}

}  // namespace
}  // namespace swarmpath::cli
