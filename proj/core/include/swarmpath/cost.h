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

#ifndef SWARMPATH_COST_H_
#define SWARMPATH_COST_H_

#include <span>
#include <vector>

#include "swarmpath/assignment.h"
#include "swarmpath/scenario.h"

namespace swarmpath {

/// Cost terms of one agent. Indicator counts are the number of threats whose
/// radar (alpha) or missile (beta) range contains the agent, the number of
/// other agents within the safe distance (gamma), and whether the range
/// budget is exceeded.
struct AgentCost {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  double f4 = 0.0;
  int alpha_sum = 0;
  int beta_sum = 0;
  int gamma_sum = 0;
  bool range_exceeded = false;

  double total() const { return f1 + f2 + f3 + f4; }
};

struct CostBreakdown {
  /// Indexed by agent id; agents not taking part have all-zero entries.
  std::vector<AgentCost> per_agent;
  /// Non-smooth part: sum of f2 + f3 + f4.
  double F = 0.0;
  /// Full objective: sum of f1 + f2 + f3 + f4.
  double H = 0.0;
};

/// 1/2 D^2 to the assigned target.
double distance_cost(const AgentState& agent, const Vec2& target);

/// k_d * #(D <= R_d) + k_a * #(D <= R_a) over the radar-missiles.
double threat_penalty(const AgentState& agent, std::span<const RadarMissileState> threats,
                      const ScenarioParams& params);

/// k_c times the number of other active agents within D_safe. Entries of
/// `others` with the same id as `agent` are skipped.
double collision_penalty(const AgentState& agent, std::span<const AgentState> others,
                         const ScenarioParams& params);

/// k_l if L + D > L_bar, else 0.
double range_penalty(const AgentState& agent, const Vec2& target, const ScenarioParams& params);

/// Throws ContractViolation if an active agent has no assigned target.
CostBreakdown objective(const ScenarioState& state, const AssignmentTable& assignment);

/// Polygonal ramp replacing the indicator [d <= threshold]: 1 below
/// threshold - eta, 0 above threshold + eta, linear in between.
double ramp_below(double d, double threshold, double eta);
/// d/dd of ramp_below.
double ramp_below_slope(double d, double threshold, double eta);

/// Smoothed radar-missile and collision terms (f2 + f3) for a set of agent
/// positions, all of which take part. Depends only on positions, which is
/// what the surrogate network sees.
double smoothed_interaction_penalty(std::span<const Vec2> agents, std::span<const Vec2> threats,
                                    const ScenarioParams& params);

/// Smoothed range term k_l * ramp for one agent.
double smoothed_range_penalty(double path_length, double target_distance,
                              const ScenarioParams& params);

/// Gradient of smoothed_range_penalty with respect to the agent position.
Vec2 smoothed_range_gradient(const Vec2& agent, const Vec2& target, double path_length,
                             const ScenarioParams& params);

/// Continuous version of F: every indicator in f2, f3 and f4 replaced by its
/// polygonal ramp. Inactive agents are skipped.
double smoothed_penalty(const ScenarioState& state, const AssignmentTable& assignment);

}  // namespace swarmpath

#endif  // SWARMPATH_COST_H_
