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

#include <gtest/gtest.h>

#include "oracles.h"
#include "swarmpath/cost.h"

namespace swarmpath {
namespace {

using testing::make_state;

AgentState agent_at(Vec2 p, int id = 0) {
  AgentState a;
  a.id = id;
  a.position = p;
  a.velocity = {0.06, 0};
  return a;
}

TEST(DistanceCost, HalfSquaredDistance) {
  EXPECT_DOUBLE_EQ(distance_cost(agent_at({0, 0}), {3, 4}), 12.5);
  EXPECT_EQ(distance_cost(agent_at({2, 2}), {2, 2}), 0.0);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 a{rng.uniform(0, 200), rng.uniform(0, 200)};
    const Vec2 t{rng.uniform(0, 200), rng.uniform(0, 200)};
    const double dx = t.x - a.x, dy = t.y - a.y;
    EXPECT_NEAR(distance_cost(agent_at(a), t), (dx * dx + dy * dy) / 2, 1e-12 * (1 + dx * dx + dy * dy));
  }
}

TEST(ThreatPenalty, NestedRegions) {
  const ScenarioParams p;
  const std::vector<RadarMissileState> threat{{0, {0, 0}, {}}};
  EXPECT_EQ(threat_penalty(agent_at({7, 0}), threat, p), 1e5);
  EXPECT_EQ(threat_penalty(agent_at({12, 0}), threat, p), 0.0);
  EXPECT_EQ(threat_penalty(agent_at({4, 0}), threat, p), 2e5);
  // Boundaries count as inside.
  EXPECT_EQ(threat_penalty(agent_at({10, 0}), threat, p), 1e5);
  EXPECT_EQ(threat_penalty(agent_at({5, 0}), threat, p), 2e5);
}

TEST(CollisionPenalty, CountsOthersWithinSafeDistance) {
  const ScenarioParams p;
  const auto me = agent_at({0, 0}, 0);
  EXPECT_EQ(collision_penalty(me, std::vector<AgentState>{me, agent_at({0.05, 0}, 1), agent_at({1, 0}, 2)}, p), 1e4);
  EXPECT_EQ(collision_penalty(me, std::vector<AgentState>{agent_at({0.2, 0}, 1), agent_at({0, 0.3}, 2)}, p), 0.0);
  EXPECT_EQ(collision_penalty(me, std::vector<AgentState>{agent_at({0.05, 0}, 1), agent_at({0, 0.08}, 2)}, p), 2e4);
  auto dead = agent_at({0.01, 0}, 3);
  dead.alive = false;
  EXPECT_EQ(collision_penalty(me, std::vector<AgentState>{dead}, p), 0.0);
}

TEST(RangePenalty, StrictExcess) {
  const ScenarioParams p;
  auto a = agent_at({0, 0});
  EXPECT_EQ(range_penalty(a, {100, 0}, p), 0.0);
  a.path_length = 480;
  EXPECT_EQ(range_penalty(a, {100, 0}, p), 1e4);
  a.path_length = 400;
  EXPECT_EQ(range_penalty(a, {100, 0}, p), 0.0);
}

TEST(Objective, SingleAgentNearThreat) {
  const ScenarioParams p;
  const auto s = make_state(p, {{0, 0}}, {{3, 4}}, {{7, 0}});
  const auto table = assign(s, s.agent_positions());
  const auto c = objective(s, table);
  EXPECT_DOUBLE_EQ(c.H, 12.5 + 1e5);
  EXPECT_DOUBLE_EQ(c.F, 1e5);
  EXPECT_EQ(c.per_agent[0].alpha_sum, 1);
  EXPECT_EQ(c.per_agent[0].beta_sum, 0);
}

TEST(Objective, AtTargetsIsZero) {
  const ScenarioParams p;
  const auto s = make_state(p, {{10, 10}, {50, 50}}, {{10, 10}, {50, 50}}, {{150, 150}});
  const auto c = objective(s, assign(s, s.agent_positions()));
  EXPECT_EQ(c.H, 0.0);
}

TEST(Objective, ConsistentWithComponents) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    ScenarioParams p;
    p.region_half_extent = 10;  // crowded, so every term fires now and then
    auto s = random_scenario(p, trial);
    for (auto& a : s.agents) a.path_length = rng.uniform(0, 600);
    const auto table = assign(s, s.agent_positions());
    const auto c = objective(s, table);
    double H = 0, F = 0;
    for (const auto& a : s.agents) {
      const Vec2 t = s.targets[*table.target_of(a.id)].position;
      const double f2 = threat_penalty(a, s.radar_missiles, p);
      const double f3 = collision_penalty(a, s.agents, p);
      const double f4 = range_penalty(a, t, p);
      F += f2 + f3 + f4;
      H += distance_cost(a, t) + f2 + f3 + f4;
    }
    EXPECT_NEAR(c.F, F, 1e-10 * (1 + F));
    EXPECT_NEAR(c.H, H, 1e-10 * (1 + H));
    EXPECT_GE(c.H, 0.0);
    EXPECT_LE(c.F, p.max_penalty());
  }
}

TEST(Objective, MatrixFormAgrees) {
  // H = 1/2 (X - X_T)^T (X - X_T) + k_d 1^T A 1 + k_a 1^T B 1 + k_c 1^T G 1 + k_l 1^T e.
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    ScenarioParams p;
    p.region_half_extent = 15;
    auto s = random_scenario(p, 100 + trial);
    const auto table = assign(s, s.agent_positions());
    const int n = p.n_agents, m = p.n_radar_missiles;
    std::vector<double> diff;
    double A = 0, B = 0, G = 0, E = 0;
    for (int i = 0; i < n; ++i) {
      const Vec2 t = s.targets[*table.target_of(i)].position;
      diff.push_back(s.agents[i].position.x - t.x);
      diff.push_back(s.agents[i].position.y - t.y);
      for (int j = 0; j < m; ++j) {
        const double d = distance(s.agents[i].position, s.radar_missiles[j].position);
        A += d <= p.radar_radius;
        B += d <= p.missile_radius;
      }
      for (int j = 0; j < n; ++j) {
        if (j != i) G += distance(s.agents[i].position, s.agents[j].position) <= p.safe_distance;
      }
      E += s.agents[i].path_length + distance(s.agents[i].position, t) > p.max_range;
    }
    double quad = 0;
    for (double v : diff) quad += v * v;
    const double H = 0.5 * quad + p.k_d * A + p.k_a * B + p.k_c * G + p.k_l * E;
    EXPECT_NEAR(objective(s, table).H, H, 1e-10 * (1 + H));
  }
}

TEST(Objective, PermutationInvariant) {
  const auto s = random_scenario(ScenarioParams{}, 8);
  const auto table = assign(s, s.agent_positions());
  const double H = objective(s, table).H;
  // Reverse agent ids and carry the assignment along.
  ScenarioState r = s;
  AssignmentTable rt = table;
  const int n = static_cast<int>(s.agents.size());
  for (int i = 0; i < n; ++i) {
    r.agents[i] = s.agents[n - 1 - i];
    r.agents[i].id = i;
    rt.target_of_agent[i] = table.target_of_agent[n - 1 - i];
  }
  EXPECT_NEAR(objective(r, rt).H, H, 1e-9 * H);
}

TEST(Objective, UnassignedActiveAgentIsContractViolation) {
  const auto s = random_scenario(ScenarioParams{}, 8);
  AssignmentTable empty;
  empty.target_of_agent.assign(s.agents.size(), std::nullopt);
  EXPECT_THROW(objective(s, empty), ContractViolation);
}

TEST(RampBelow, MidpointAndEnds) {
  EXPECT_NEAR(ramp_below(10.0, 10.0, 0.2), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(ramp_below(10.2, 10.0, 0.2), 0.0);
  EXPECT_NEAR(ramp_below(9.8, 10.0, 0.2), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(ramp_below_slope(10.0, 10.0, 0.2), -2.5);
  EXPECT_EQ(ramp_below_slope(11.0, 10.0, 0.2), 0.0);
}

TEST(SmoothedPenalty, RadarBoundaryValues) {
  const ScenarioParams p;
  auto on = [&](double d) {
    const std::vector<Vec2> agents{{d, 0}}, threats{{0, 0}};
    return smoothed_interaction_penalty(agents, threats, p);
  };
  EXPECT_NEAR(on(10.0), 0.5 * 1e5, 1e-7);
  EXPECT_DOUBLE_EQ(on(10.2), 0.0);
  EXPECT_NEAR(on(9.8), 1e5, 1e-7);
}

TEST(SmoothedPenalty, LipschitzAcrossRadarBoundary) {
  const ScenarioParams p;
  const double eta = p.smoothing_width;
  const int steps = 10000;
  const double lo = p.radar_radius - 2 * eta, hi = p.radar_radius + 2 * eta;
  const double h = (hi - lo) / steps;
  double prev = 0, worst = 0;
  for (int k = 0; k <= steps; ++k) {
    const std::vector<Vec2> agents{{lo + k * h, 0}}, threats{{0, 0}};
    const double v = smoothed_interaction_penalty(agents, threats, p);
    if (k > 0) worst = std::max(worst, std::abs(v - prev));
    prev = v;
  }
  EXPECT_LE(worst, p.k_d * h / eta + 1e-9);
}

TEST(SmoothedPenalty, EqualsHardPenaltyAwayFromThresholds) {
  Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    ScenarioParams p;
    p.region_half_extent = 12;
    auto s = random_scenario(p, trial);
    for (auto& a : s.agents) a.path_length = rng.uniform(0, 600);
    const auto table = assign(s, s.agent_positions());
    bool clear = true;
    const double eta = p.smoothing_width;
    for (const auto& a : s.agents) {
      for (const auto& o : s.radar_missiles) {
        const double d = distance(a.position, o.position);
        clear = clear && std::abs(d - p.radar_radius) >= eta && std::abs(d - p.missile_radius) >= eta;
      }
      for (const auto& b : s.agents) {
        if (b.id != a.id) clear = clear && std::abs(distance(a.position, b.position) - p.safe_distance) >= eta;
      }
      const double reach = a.path_length + distance(a.position, s.targets[*table.target_of(a.id)].position);
      clear = clear && std::abs(reach - p.max_range) >= eta;
    }
    if (!clear) continue;
    ++checked;
    EXPECT_NEAR(smoothed_penalty(s, table), objective(s, table).F, 1e-6);
  }
  EXPECT_GT(checked, 20);
}

TEST(SmoothedPenalty, Bounded) {
  for (int trial = 0; trial < 100; ++trial) {
    ScenarioParams p;
    p.region_half_extent = 5;
    const auto s = random_scenario(p, trial);
    const double v = smoothed_penalty(s, assign(s, s.agent_positions()));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, p.max_penalty());
  }
}

TEST(SmoothedRange, GradientMatchesFiniteDifference) {
  const ScenarioParams p;
  const Vec2 target{100, 50};
  for (double path : {100.0, 429.2, 429.3, 429.4, 700.0}) {
    const Vec2 x{30, 40};
    const double d0 = distance(x, target);
    const Vec2 g = smoothed_range_gradient(x, target, path, p);
    const double h = 1e-6;
    const double gx = (smoothed_range_penalty(path, distance(x + Vec2{h, 0}, target), p) -
                       smoothed_range_penalty(path, distance(x - Vec2{h, 0}, target), p)) / (2 * h);
    EXPECT_NEAR(g.x, gx, 1e-3 * (1 + std::abs(gx))) << "path " << path << " d " << d0;
  }
}

}  // namespace
}  // namespace swarmpath
