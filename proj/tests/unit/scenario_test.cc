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

#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "oracles.h"
#include "swarmpath/scenario.h"

namespace swarmpath {
namespace {

std::filesystem::path source_dir() { return SWARMPATH_SOURCE_DIR; }

std::string params_with(const std::string& overrides) {
  return R"({"params": {"region_half_extent": 100)" + overrides + "}}";
}

TEST(ScenarioParams, DefaultsAreTheReferenceScenario) {
  const ScenarioParams p;
  EXPECT_EQ(p.region_size(), 200.0);
  EXPECT_EQ(p.n_agents, 10);
  EXPECT_EQ(p.n_radar_missiles, 4);
  EXPECT_EQ(p.n_targets, 5);
  EXPECT_DOUBLE_EQ(p.step_length(), 0.3);
  EXPECT_NO_THROW(validate(p));
}

TEST(ScenarioParams, HeadingLimitFromLateralOverload) {
  // n_max * g * dt / v_max with g in km/s^2.
  const ScenarioParams p;
  EXPECT_NEAR(p.max_heading_change(), 10 * 9.8e-3 * 5 / 0.06, 1e-12);
}

TEST(ScenarioParams, MaxPenalty) {
  const ScenarioParams p;
  EXPECT_DOUBLE_EQ(p.max_penalty(), 10 * (4 * 2e5 + 10 * 1e4 + 1e4));
}

TEST(LoadScenario, ReferenceFileIsValid) {
  const auto s = load_scenario(source_dir() / "scenarios/ten_agents.json");
  EXPECT_EQ(s.agents.size(), 10u);
  EXPECT_EQ(s.radar_missiles.size(), 4u);
  EXPECT_EQ(s.targets.size(), 5u);
  EXPECT_EQ(s.params.radar_radius, 10.0);
  EXPECT_EQ(s.params.missile_radius, 5.0);
  EXPECT_EQ(s.params.safe_distance, 0.1);
  EXPECT_EQ(s.params.v_max, 0.06);
  EXPECT_EQ(s.params.dt, 5.0);
  EXPECT_EQ(s.params.max_range, 500.0);
  EXPECT_EQ(s.params.k_d, 1e5);
  EXPECT_EQ(s.params.k_c, 1e4);
  EXPECT_NO_THROW(validate(s));
}

TEST(LoadScenario, RadarInsideMissileRejected) {
  try {
    parse_scenario(params_with(R"(, "radar_radius": 5, "missile_radius": 10)"));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "R_d > R_a violated");
  }
}

TEST(LoadScenario, MoreTargetsThanAgentsRejected) {
  try {
    parse_scenario(params_with(R"(, "n_targets": 6, "n_agents": 5)"));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "K ≤ N violated");
  }
}

TEST(LoadScenario, UnknownKeysRejected) {
  EXPECT_THROW(parse_scenario(params_with(R"(, "radius": 3)")), ParseError);
  EXPECT_THROW(parse_scenario(R"({"params": {}, "extra": 1})"), ParseError);
}

TEST(LoadScenario, MalformedTextRejected) {
  EXPECT_THROW(parse_scenario("{\"params\": "), ParseError);
  EXPECT_THROW(parse_scenario("[]"), ParseError);
  EXPECT_THROW(load_scenario("/nonexistent/scenario.json"), ParseError);
}

TEST(LoadScenario, PartialLayoutRejected) {
  EXPECT_THROW(parse_scenario(R"({"params": {"n_agents": 1, "n_targets": 0, "n_radar_missiles": 0},
                                  "agents": [{"x": 1, "y": 1, "vx": 0.06, "vy": 0}]})"),
               ParseError);
}

TEST(LoadScenario, ExplicitLayout) {
  const auto s = parse_scenario(R"({
    "params": {"n_agents": 2, "n_targets": 1, "n_radar_missiles": 1},
    "agents": [{"x": 1, "y": 2, "vx": 0.06, "vy": 0}, {"x": 3, "y": 4, "vx": 0, "vy": 0.06, "path_length": 7}],
    "targets": [{"x": 50, "y": 60}],
    "radar_missiles": [{"x": 100, "y": 100, "vx": 0, "vy": 0}]})");
  EXPECT_EQ(s.agents[1].position, (Vec2{3, 4}));
  EXPECT_EQ(s.agents[1].path_length, 7.0);
  EXPECT_NEAR(s.agents[1].heading, std::numbers::pi / 2, 1e-15);
  EXPECT_EQ(s.targets[0].position, (Vec2{50, 60}));
}

TEST(LoadScenario, AgentFasterThanVmaxRejected) {
  EXPECT_THROW(parse_scenario(R"({
    "params": {"n_agents": 1, "n_targets": 0, "n_radar_missiles": 0},
    "agents": [{"x": 1, "y": 2, "vx": 0.07, "vy": 0}], "targets": [], "radar_missiles": []})"),
               ValidationError);
}

TEST(SaveScenario, RoundTripIsExact) {
  const auto s = random_scenario(ScenarioParams{}, 99);
  const auto back = parse_scenario(scenario_to_json(s));
  ASSERT_EQ(back.agents.size(), s.agents.size());
  for (std::size_t i = 0; i < s.agents.size(); ++i) {
    EXPECT_EQ(back.agents[i].position, s.agents[i].position);
    EXPECT_EQ(back.agents[i].velocity, s.agents[i].velocity);
    EXPECT_NEAR(back.agents[i].heading, s.agents[i].heading, 1e-12);
  }
  EXPECT_EQ(back.targets, s.targets);
  EXPECT_EQ(back.radar_missiles, s.radar_missiles);
  EXPECT_EQ(back.params, s.params);
  EXPECT_EQ(back.rng_seed, s.rng_seed);

  const auto path = std::filesystem::temp_directory_path() / "swarmpath_roundtrip.json";
  save_scenario(s, path);
  EXPECT_EQ(load_scenario(path).targets, s.targets);
  std::filesystem::remove(path);
}

TEST(RandomScenario, Deterministic) {
  EXPECT_EQ(random_scenario(ScenarioParams{}, 5), random_scenario(ScenarioParams{}, 5));
}

TEST(RandomScenario, SeedSensitive) {
  EXPECT_NE(random_scenario(ScenarioParams{}, 5).agent_positions(),
            random_scenario(ScenarioParams{}, 6).agent_positions());
}

TEST(RandomScenario, InsideRegionAtFullSpeed) {
  const ScenarioParams p;
  const auto s = random_scenario(p, 17);
  for (const auto& a : s.agents) {
    EXPECT_GE(a.position.x, 0.0);
    EXPECT_LE(a.position.x, 200.0);
    EXPECT_GE(a.position.y, 0.0);
    EXPECT_LE(a.position.y, 200.0);
    EXPECT_NEAR(a.speed(), p.v_max, 1e-15);
    EXPECT_NEAR(a.heading, std::atan2(a.velocity.y, a.velocity.x), 1e-9);
  }
}

TEST(ReflectInto, MirrorsAtWalls) {
  EXPECT_DOUBLE_EQ(reflect_into(-1.0, 10.0), 1.0);
  EXPECT_DOUBLE_EQ(reflect_into(11.0, 10.0), 9.0);
  EXPECT_DOUBLE_EQ(reflect_into(25.0, 10.0), 5.0);
  EXPECT_DOUBLE_EQ(reflect_into(10.0, 10.0), 10.0);
}

TEST(AdvanceEntities, TargetsStepExactlyDeltaDt) {
  const ScenarioParams p;
  auto s = random_scenario(p, 3);
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto next = advance_entities(s, rng);
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
      const double d = distance(next.targets[i].position, s.targets[i].position);
      EXPECT_LE(d, 0.05 + 1e-12);
      // Exact unless the step was folded at a wall.
      const auto& q = next.targets[i].position;
      if (q.x > 0.05 && q.x < 199.95 && q.y > 0.05 && q.y < 199.95) {
        EXPECT_NEAR(d, 0.05, 1e-12);
      }
    }
    EXPECT_EQ(next.agents, s.agents);
    s = next;
  }
}

TEST(AdvanceEntities, ZeroSpeedHoldsTargets) {
  ScenarioParams p;
  p.target_max_speed = 0.0;
  p.threat_max_speed = 0.0;
  const auto s = random_scenario(p, 3);
  Rng rng(1);
  const auto next = advance_entities(s, rng);
  EXPECT_EQ(next.targets, s.targets);
  EXPECT_EQ(next.threat_positions(), s.threat_positions());
}

TEST(AdvanceEntities, StaysInRegionNearWalls) {
  ScenarioParams p;
  p.region_half_extent = 1.0;
  p.target_max_speed = 0.3;
  p.n_agents = 1;
  p.n_targets = 1;
  p.n_radar_missiles = 1;
  auto s = random_scenario(p, 1);
  s.targets[0].position = {0.0, 2.0};
  Rng rng(2);
  for (int k = 0; k < 10000; ++k) {
    s = advance_entities(s, rng);
    for (const auto& q : {s.targets[0].position, s.radar_missiles[0].position}) {
      ASSERT_GE(q.x, 0.0);
      ASSERT_LE(q.x, 2.0);
      ASSERT_GE(q.y, 0.0);
      ASSERT_LE(q.y, 2.0);
    }
  }
}

TEST(AdvanceEntities, DeadTargetsStay) {
  auto s = random_scenario(ScenarioParams{}, 3);
  s.targets[2].alive = false;
  Rng rng(1);
  EXPECT_EQ(advance_entities(s, rng).targets[2].position, s.targets[2].position);
}

}  // namespace
}  // namespace swarmpath
