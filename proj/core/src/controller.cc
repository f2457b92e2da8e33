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

#include "swarmpath/controller.h"

#include <cmath>
#include <numbers>
#include <string>

#include "swarmpath/cost.h"

namespace swarmpath {

ControllerConfig resolve(const ControllerConfig& config, const ScenarioParams& params) {
  ControllerConfig out = config;
  const double step = params.step_length();
  if (out.capture_radius == 0.0) out.capture_radius = step;
  if (out.max_heading_change == 0.0) out.max_heading_change = params.max_heading_change();
  if (!(out.capture_radius > 0.0) || !std::isfinite(out.capture_radius)) {
    throw ValidationError("capture_radius > 0 violated");
  }
  // An agent moving a fixed step could hop over a smaller capture disc forever.
  if (out.capture_radius < step * (1.0 - 1e-12)) {
    throw ValidationError("capture_radius >= v_max * dt violated");
  }
  if (!(out.max_heading_change > 0.0) || std::isnan(out.max_heading_change)) {
    throw ValidationError("psi_max > 0 violated");
  }
  return out;
}

Vec2 negative_gradient(const SurrogateNet& net, const ScenarioState& state,
                       const AssignmentTable& assignment, int agent_id,
                       const ControllerConfig& config) {
  if (agent_id < 0 || agent_id >= static_cast<int>(state.agents.size())) {
    throw ContractViolation("negative_gradient: unknown agent " + std::to_string(agent_id));
  }
  const AgentState& agent = state.agents[agent_id];
  if (!agent.active()) {
    throw ContractViolation("negative_gradient: agent " + std::to_string(agent_id) +
                            " is not active");
  }
  const auto target_id = assignment.target_of(agent_id);
  if (!target_id) {
    throw ContractViolation("negative_gradient: agent " + std::to_string(agent_id) +
                            " has no target");
  }
  const Vec2 target = state.targets.at(*target_id).position;
  Vec2 d = target - agent.position;
  if (config.mode == ControlMode::kSurrogate) {
    std::vector<Vec2> agents;
    std::vector<char> active;
    agents.reserve(state.agents.size());
    active.reserve(state.agents.size());
    for (const auto& a : state.agents) {
      agents.push_back(a.position);
      active.push_back(a.active() ? 1 : 0);
    }
    const auto threats = state.threat_positions();
    const auto x = pack_input(agents, active, threats);
    const auto grad = input_gradient(net, x);
    d -= Vec2{grad[2 * agent_id], grad[2 * agent_id + 1]};
    if (config.analytic_range_term) {
      d -= smoothed_range_gradient(agent.position, target, agent.path_length, state.params);
    }
  }
  return d;
}

HeadingChoice clamp_heading(const Vec2& velocity, const Vec2& d, double max_turn) {
  const double speed = norm(velocity);
  if (!(speed > 0.0)) throw ContractViolation("clamp_heading: zero velocity");
  const double length = norm(d);
  if (length == 0.0) return {velocity, velocity * (1.0 / speed), false, true};
  if (max_turn >= std::numbers::pi || angle_between(velocity, d) <= max_turn) {
    return {d, d * (1.0 / length), false, false};
  }
  const double turn = cross(velocity, d) > 0.0 ? max_turn : -max_turn;
  const Vec2 rotated = rotate(velocity, turn);
  return {rotated, rotated * (1.0 / norm(rotated)), true, false};
}

ControlStep step_agent(const ScenarioState& state, const SurrogateNet& net,
                       const AssignmentTable& assignment, int agent_id,
                       const ControllerConfig& config) {
  const AgentState& agent = state.agents.at(agent_id);
  ControlStep step;
  step.agent_id = agent_id;
  step.gradient = negative_gradient(net, state, assignment, agent_id, config);
  const double max_turn = config.max_heading_change > 0.0 ? config.max_heading_change
                                                          : state.params.max_heading_change();
  const HeadingChoice choice = clamp_heading(agent.velocity, step.gradient, max_turn);
  step.unit = choice.unit;
  step.clamped = choice.direction;
  step.clamp_applied = choice.clamp_applied;
  step.zero_gradient = choice.zero_gradient;
  step.step_size = state.params.step_length();
  step.displacement = step.unit * step.step_size;
  return step;
}

ControlStep step_agent_estimated(const ScenarioState& estimated, const SurrogateNet& net,
                                 const AssignmentTable& assignment, int agent_id,
                                 const ControllerConfig& config) {
  return step_agent(estimated, net, assignment, agent_id, config);
}

void apply_step(AgentState& agent, const ControlStep& step, const ScenarioParams& params) {
  agent.position += step.displacement;
  agent.velocity = step.unit * params.v_max;
  agent.heading = std::atan2(step.unit.y, step.unit.x);
  agent.path_length += step.step_size;
}

std::vector<Capture> check_capture(ScenarioState& state, const AssignmentTable& assignment,
                                   double capture_radius) {
  std::vector<Capture> captures;
  for (auto& agent : state.agents) {
    if (!agent.active()) continue;
    const auto target_id = assignment.target_of(agent.id);
    if (!target_id) continue;
    TargetState& target = state.targets.at(*target_id);
    if (!target.alive) continue;
    const double d = distance(agent.position, target.position);
    if (d <= capture_radius) {
      agent.captured = true;
      target.alive = false;
      captures.push_back({agent.id, target.id, d});
    }
  }
  return captures;
}

}  // namespace swarmpath
