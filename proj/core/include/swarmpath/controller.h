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

#ifndef SWARMPATH_CONTROLLER_H_
#define SWARMPATH_CONTROLLER_H_

#include <optional>
#include <span>
#include <vector>

#include "swarmpath/assignment.h"
#include "swarmpath/geometry.h"
#include "swarmpath/scenario.h"
#include "swarmpath/surrogate.h"

namespace swarmpath {

enum class ControlMode {
  /// Descend F* + sum f1: network gradient plus target attraction.
  kSurrogate,
  /// Descend the original objective. Its penalty part is piecewise constant,
  /// so only the attraction term contributes.
  kRawBaseline,
};

enum class EstimationCase {
  /// Agents act on their true positions.
  kExact = 1,
  /// Agents act on the command center's dead-reckoned estimates.
  kDeadReckoned = 2,
};

struct ControllerConfig {
  ControlMode mode = ControlMode::kSurrogate;
  EstimationCase estimation = EstimationCase::kExact;
  /// Capture when within this distance of the target; 0 means one tick's
  /// travel, v_max * dt. Must not be below v_max * dt.
  double capture_radius = 0.0;
  /// Per-tick heading limit; 0 means n_max * g * dt / v_max.
  double max_heading_change = 0.0;
  /// Add the gradient of the smoothed range term, which the network does not
  /// model (it never sees path lengths).
  bool analytic_range_term = true;
};

/// Fills defaulted fields from `params` and validates the result.
ControllerConfig resolve(const ControllerConfig& config, const ScenarioParams& params);

struct HeadingChoice {
  /// d itself, or the rotated velocity when the clamp fires.
  Vec2 direction;
  Vec2 unit;
  bool clamp_applied = false;
  /// d was zero, so the current heading was kept.
  bool zero_gradient = false;
};

struct ControlStep {
  int agent_id = 0;
  /// Negative gradient d.
  Vec2 gradient;
  /// Direction after the heading clamp (the rotated velocity when clamped).
  Vec2 clamped;
  Vec2 unit;
  double step_size = 0.0;
  Vec2 displacement;
  bool clamp_applied = false;
  bool zero_gradient = false;
};

/// -dF*/dp_i - (p_i - p_target) for agent `agent_id`, evaluated on the
/// positions in `state`. Throws ContractViolation for an inactive or
/// unassigned agent.
Vec2 negative_gradient(const SurrogateNet& net, const ScenarioState& state,
                       const AssignmentTable& assignment, int agent_id,
                       const ControllerConfig& config);

/// Unit direction within `max_turn` of `velocity`. When d turns too far the
/// velocity is rotated by exactly max_turn, counterclockwise if
/// velocity x d > 0 and clockwise otherwise.
HeadingChoice clamp_heading(const Vec2& velocity, const Vec2& d, double max_turn);

/// The step agent `agent_id` takes from `state`. Pure: nothing is modified.
ControlStep step_agent(const ScenarioState& state, const SurrogateNet& net,
                       const AssignmentTable& assignment, int agent_id,
                       const ControllerConfig& config);

/// Same arithmetic on the command center's estimated state.
ControlStep step_agent_estimated(const ScenarioState& estimated, const SurrogateNet& net,
                                 const AssignmentTable& assignment, int agent_id,
                                 const ControllerConfig& config);

/// Moves the agent by the step and updates velocity, heading and path length.
void apply_step(AgentState& agent, const ControlStep& step, const ScenarioParams& params);

struct Capture {
  int agent_id = 0;
  int target_id = 0;
  double distance = 0.0;

  friend bool operator==(const Capture&, const Capture&) = default;
};

/// Marks every active agent within `capture_radius` (inclusive) of its
/// assigned, still-alive target as captured and the target as destroyed.
/// Agents are scanned in id order, so when two reach one target in the same
/// tick the lower id takes it.
std::vector<Capture> check_capture(ScenarioState& state, const AssignmentTable& assignment,
                                   double capture_radius);

}  // namespace swarmpath

#endif  // SWARMPATH_CONTROLLER_H_
