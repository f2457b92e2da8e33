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

#ifndef SWARMPATH_SCENARIO_H_
#define SWARMPATH_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmpath/geometry.h"
#include "swarmpath/rng.h"

namespace swarmpath {

/// A scenario or configuration violated one of its invariants. The message
/// names the violated condition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// World and agent parameters. Lengths are km, times s, speeds km/s.
/// Default values are the reference scenario: a 200 km x 200 km region with
/// 10 agents, 4 radar-missiles and 5 targets.
struct ScenarioParams {
  /// The region is the square [0, 2 * region_half_extent]^2.
  double region_half_extent = 100.0;
  int n_agents = 10;
  int n_radar_missiles = 4;
  int n_targets = 5;
  double radar_radius = 10.0;
  double missile_radius = 5.0;
  double safe_distance = 0.1;
  double v_max = 0.06;
  /// Lateral overload bound (dimensionless).
  double n_max = 10.0;
  /// Gravitational acceleration in m/s^2.
  double gravity = 9.8;
  double max_range = 500.0;
  double k_d = 1e5;
  double k_a = 1e5;
  double k_c = 1e4;
  double k_l = 1e4;
  double dt = 5.0;
  double target_max_speed = 0.01;
  /// Radar-missile speed; unset means "same as target_max_speed".
  std::optional<double> threat_max_speed;
  double smoothing_width = 0.2;
  int assignment_period = 5;
  double assignment_scale = 1.0;

  double region_size() const { return 2.0 * region_half_extent; }
  /// Distance covered in one tick at full speed.
  double step_length() const { return v_max * dt; }
  /// Largest heading change allowed in one tick, n_max * g * dt / v_max.
  double max_heading_change() const { return n_max * gravity * 1e-3 * dt / v_max; }
  double threat_speed() const { return threat_max_speed.value_or(target_max_speed); }
  /// Upper bound on the penalty part of the objective for any state.
  double max_penalty() const;

  friend bool operator==(const ScenarioParams&, const ScenarioParams&) = default;
};

/// Throws ValidationError naming the first violated invariant.
void validate(const ScenarioParams& params);

struct AgentState {
  int id = 0;
  Vec2 position;
  Vec2 velocity;
  double heading = 0.0;
  double path_length = 0.0;
  bool alive = true;
  bool captured = false;

  /// Still taking part in the problem: neither lost nor done.
  bool active() const { return alive && !captured; }
  double speed() const { return norm(velocity); }

  friend bool operator==(const AgentState&, const AgentState&) = default;
};

struct RadarMissileState {
  int id = 0;
  Vec2 position;
  Vec2 velocity;

  friend bool operator==(const RadarMissileState&, const RadarMissileState&) = default;
};

struct TargetState {
  int id = 0;
  Vec2 position;
  Vec2 velocity;
  bool alive = true;

  friend bool operator==(const TargetState&, const TargetState&) = default;
};

/// Full world snapshot at one tick.
struct ScenarioState {
  int tick = 0;
  ScenarioParams params;
  std::vector<AgentState> agents;
  std::vector<RadarMissileState> radar_missiles;
  std::vector<TargetState> targets;
  std::uint64_t rng_seed = 0;

  std::vector<Vec2> agent_positions() const;
  std::vector<Vec2> threat_positions() const;
  int active_agent_count() const;
  int alive_target_count() const;

  friend bool operator==(const ScenarioState&, const ScenarioState&) = default;
};

/// Checks params plus list sizes, finiteness and agent speed limits.
void validate(const ScenarioState& state);

/// Reads and validates a scenario file (JSON, see README for the schema).
ScenarioState load_scenario(const std::filesystem::path& path);
ScenarioState parse_scenario(const std::string& text);
std::string scenario_to_json(const ScenarioState& state);
void save_scenario(const ScenarioState& state, const std::filesystem::path& path);

/// Uniform placement over the region; agents start at full speed with a
/// uniformly random heading. Deterministic per seed.
ScenarioState random_scenario(const ScenarioParams& params, std::uint64_t seed);

/// Maps a coordinate back into [0, size] by mirror reflection at the walls.
double reflect_into(double coordinate, double size);

/// One random-walk step for every alive target and every radar-missile:
/// a fixed-length step in a uniformly random direction, reflected at the
/// region boundary. Agents are untouched; the tick counter is not advanced.
ScenarioState advance_entities(const ScenarioState& state, Rng& rng);

}  // namespace swarmpath

#endif  // SWARMPATH_SCENARIO_H_
