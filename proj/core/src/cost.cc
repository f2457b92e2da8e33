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

#include "swarmpath/cost.h"

#include <algorithm>
#include <string>

namespace swarmpath {

double distance_cost(const AgentState& agent, const Vec2& target) {
  const Vec2 diff = agent.position - target;
  return 0.5 * squared_norm(diff);
}

double threat_penalty(const AgentState& agent, std::span<const RadarMissileState> threats,
                      const ScenarioParams& p) {
  int alpha = 0;
  int beta = 0;
  for (const auto& o : threats) {
    const double d = distance(agent.position, o.position);
    alpha += d <= p.radar_radius ? 1 : 0;
    beta += d <= p.missile_radius ? 1 : 0;
  }
  return p.k_d * alpha + p.k_a * beta;
}

double collision_penalty(const AgentState& agent, std::span<const AgentState> others,
                         const ScenarioParams& p) {
  int gamma = 0;
  for (const auto& other : others) {
    if (other.id == agent.id || !other.active()) continue;
    gamma += distance(agent.position, other.position) <= p.safe_distance ? 1 : 0;
  }
  return p.k_c * gamma;
}

double range_penalty(const AgentState& agent, const Vec2& target, const ScenarioParams& p) {
  return agent.path_length + distance(agent.position, target) > p.max_range ? p.k_l : 0.0;
}

CostBreakdown objective(const ScenarioState& state, const AssignmentTable& assignment) {
  const auto& p = state.params;
  CostBreakdown out;
  out.per_agent.resize(state.agents.size());
  for (const auto& a : state.agents) {
    if (!a.active()) continue;
    const auto target = assignment.target_of(a.id);
    if (!target) {
      throw ContractViolation("objective: active agent " + std::to_string(a.id) +
                              " has no assigned target");
    }
    const Vec2 tpos = state.targets.at(*target).position;
    AgentCost& c = out.per_agent[a.id];
    c.f1 = distance_cost(a, tpos);
    for (const auto& o : state.radar_missiles) {
      const double d = distance(a.position, o.position);
      c.alpha_sum += d <= p.radar_radius ? 1 : 0;
      c.beta_sum += d <= p.missile_radius ? 1 : 0;
    }
    c.f2 = p.k_d * c.alpha_sum + p.k_a * c.beta_sum;
    for (const auto& other : state.agents) {
      if (other.id == a.id || !other.active()) continue;
      c.gamma_sum += distance(a.position, other.position) <= p.safe_distance ? 1 : 0;
    }
    c.f3 = p.k_c * c.gamma_sum;
    c.range_exceeded = a.path_length + distance(a.position, tpos) > p.max_range;
    c.f4 = c.range_exceeded ? p.k_l : 0.0;
    out.F += c.f2 + c.f3 + c.f4;
    out.H += c.total();
  }
  return out;
}

double ramp_below(double d, double threshold, double eta) {
  return std::clamp((threshold + eta - d) / (2.0 * eta), 0.0, 1.0);
}

double ramp_below_slope(double d, double threshold, double eta) {
  if (d <= threshold - eta || d >= threshold + eta) return 0.0;
  return -1.0 / (2.0 * eta);
}

double smoothed_interaction_penalty(std::span<const Vec2> agents, std::span<const Vec2> threats,
                                    const ScenarioParams& p) {
  const double eta = p.smoothing_width;
  double total = 0.0;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (const auto& o : threats) {
      const double d = distance(agents[i], o);
      total += p.k_d * ramp_below(d, p.radar_radius, eta) +
               p.k_a * ramp_below(d, p.missile_radius, eta);
    }
    for (std::size_t j = 0; j < agents.size(); ++j) {
      if (j == i) continue;
      total += p.k_c * ramp_below(distance(agents[i], agents[j]), p.safe_distance, eta);
    }
  }
  return total;
}

double smoothed_range_penalty(double path_length, double target_distance,
                              const ScenarioParams& p) {
  // [L + D > L_bar] is the complement of a "below" indicator.
  return p.k_l * (1.0 - ramp_below(path_length + target_distance, p.max_range, p.smoothing_width));
}

Vec2 smoothed_range_gradient(const Vec2& agent, const Vec2& target, double path_length,
                             const ScenarioParams& p) {
  const Vec2 diff = agent - target;
  const double d = norm(diff);
  if (d <= 0.0) return {};
  const double slope =
      -p.k_l * ramp_below_slope(path_length + d, p.max_range, p.smoothing_width);
  return diff * (slope / d);
}

double smoothed_penalty(const ScenarioState& state, const AssignmentTable& assignment) {
  const auto& p = state.params;
  std::vector<Vec2> agents;
  for (const auto& a : state.agents) {
    if (a.active()) agents.push_back(a.position);
  }
  const auto threats = state.threat_positions();
  double total = smoothed_interaction_penalty(agents, threats, p);
  for (const auto& a : state.agents) {
    if (!a.active()) continue;
    const auto target = assignment.target_of(a.id);
    if (!target) continue;
    total += smoothed_range_penalty(a.path_length,
                                    distance(a.position, state.targets.at(*target).position), p);
  }
  return total;
}

}  // namespace swarmpath
