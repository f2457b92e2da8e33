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

#ifndef SWARMPATH_SIMULATOR_H_
#define SWARMPATH_SIMULATOR_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "swarmpath/assignment.h"
#include "swarmpath/controller.h"
#include "swarmpath/geometry.h"
#include "swarmpath/rng.h"
#include "swarmpath/scenario.h"
#include "swarmpath/surrogate.h"

namespace swarmpath {

/// Everything the command center sends out in one tick. Agents act on this
/// and nothing else.
struct BroadcastFrame {
  int tick = 0;
  std::vector<Vec2> target_positions;
  std::vector<char> target_alive;
  std::vector<Vec2> threat_positions;
  AssignmentTable assignment;
  /// True positions in Case I, the center's estimates in Case II.
  std::vector<Vec2> agent_positions;
  std::vector<char> agent_lost;
};

/// The command center's model of the swarm. In Case II it dead-reckons agent
/// states from their initial values and the directions it broadcasts, and
/// only reads the true agents at explicit resync events.
class CommandCenter {
 public:
  CommandCenter(const ScenarioState& initial, EstimationCase estimation);

  /// Adds a fixed error to the initial estimate of one agent (Case II).
  void offset_estimate(int agent_id, const Vec2& offset);

  /// Agent states the controller runs on: the truth in Case I, the
  /// estimates in Case II.
  const std::vector<AgentState>& agents(const ScenarioState& truth) const;

  /// World view for the controller: entity data from `truth`, agents from
  /// agents(truth).
  ScenarioState view(const ScenarioState& truth) const;

  BroadcastFrame frame(const ScenarioState& truth, const AssignmentTable& assignment) const;

  /// Advances the estimate of an agent by the step the center broadcast.
  void record_step(const ControlStep& step, const ScenarioParams& params);

  /// Observable status changes (loss, capture) that the center learns
  /// without reading agent state.
  void mark_lost(int agent_id);
  void mark_captured(int agent_id);

  /// Case II: copies the true agent states into the estimates.
  void resync(const ScenarioState& truth);

  /// How many times the true agent states were read in Case II.
  int truth_reads() const { return truth_reads_; }

 private:
  EstimationCase estimation_;
  std::vector<AgentState> estimates_;
  int truth_reads_ = 0;
};

struct LossEvent {
  int tick = 0;
  int agent_id = 0;
};

struct SimulationConfig {
  ControllerConfig controller;
  /// 0 picks the default: ten times the summed certificate bounds when the
  /// certificate holds, otherwise 100000.
  int tick_limit = 0;
  /// Freeze targets and radar-missiles.
  bool static_entities = false;
  /// Case II: copy true agent states into the estimates every this many
  /// ticks; 0 never.
  int resync_period = 0;
  /// Case II: per-agent error added to the initial estimates.
  std::vector<Vec2> initial_estimate_offset;
  /// Case II: standard deviation (radians) of a random heading error on the
  /// true agents' actuation. Zero keeps truth and estimate in lock-step.
  double actuation_noise = 0.0;
  std::vector<LossEvent> losses;
  /// Evaluate H and F* every tick.
  bool record_costs = true;
};

enum class EventKind { kCapture, kLoss, kLossIgnored, kReassignment, kClamp, kZeroGradient, kResync };

const char* to_string(EventKind kind);

struct Event {
  EventKind kind = EventKind::kCapture;
  int agent_id = -1;
  int target_id = -1;

  friend bool operator==(const Event&, const Event&) = default;
};

struct AgentRecord {
  int id = 0;
  Vec2 position;
  double heading = 0.0;
  double path_length = 0.0;
  bool alive = true;
  bool captured = false;
  bool clamp = false;
  /// The agent moved this tick.
  bool moved = false;
  /// Assigned target during this tick, -1 if none.
  int target = -1;
  /// Distance to that target in the broadcast frame, before moving.
  double frame_distance = 0.0;
  /// Applied displacement and heading change (radians, unsigned).
  Vec2 displacement;
  double heading_change = 0.0;
  /// Case II estimate of the agent position after the move.
  Vec2 estimate;

  friend bool operator==(const AgentRecord&, const AgentRecord&) = default;
};

struct EntityRecord {
  int id = 0;
  Vec2 position;
  bool alive = true;

  friend bool operator==(const EntityRecord&, const EntityRecord&) = default;
};

struct TickRecord {
  int tick = 0;
  std::vector<AgentRecord> agents;
  std::vector<EntityRecord> targets;
  std::vector<EntityRecord> threats;
  double H = 0.0;
  double F_star = 0.0;
  std::vector<Event> events;
  /// Wall-clock time of the assignment and control computation.
  std::int64_t compute_ns = 0;
};

struct SimulationTrace {
  std::uint64_t seed = 0;
  EstimationCase estimation = EstimationCase::kExact;
  ControlMode mode = ControlMode::kSurrogate;
  int tick_limit = 0;
  /// Every target alive at the start was captured.
  bool complete = false;
  ScenarioState initial;
  ScenarioState final_state;
  std::vector<TickRecord> ticks;
  /// Capture tick per agent id.
  std::vector<std::optional<int>> arrival_tick;
  int truth_reads = 0;
};

/// Runs the receding-horizon loop until every target is captured, no agent
/// is left, or the tick limit is hit. Each tick: move targets and threats,
/// apply scheduled losses, resync (Case II), reassign if due, broadcast,
/// step every active agent from the frame, check captures, record.
/// Deterministic per (scenario, net, config, seed). Throws
/// std::invalid_argument when the network does not fit the scenario.
SimulationTrace run(const ScenarioState& scenario, const SurrogateNet& net,
                    const SimulationConfig& config, std::uint64_t seed);

/// Marks an agent lost. Returns false (and leaves the state alone) if it
/// was already lost.
bool inject_loss(ScenarioState& state, int agent_id);

/// Per-run aggregates.
struct RunSummary {
  bool complete = false;
  int ticks = 0;
  int captures = 0;
  std::vector<std::optional<int>> arrival_tick;
  std::vector<double> path_length;
  /// Agent-ticks inside a radar (detection) or missile (attack) region.
  std::vector<int> radar_incursion_ticks;
  std::vector<int> missile_incursion_ticks;
  /// Agent pairs closer than D_safe at the end of a tick, summed over ticks.
  int collision_ticks = 0;
  int agent_ticks = 0;
  int clamp_ticks = 0;
  double mean_compute_ms = 0.0;
  double max_compute_ms = 0.0;
  /// Largest deviation of the per-tick displacement length from v_max * dt,
  /// and largest heading change, over all moves.
  double max_step_error = 0.0;
  double max_heading_change = 0.0;

  int total_radar_incursions() const;
  int total_missile_incursions() const;
};

RunSummary summarize(const SimulationTrace& trace);

/// Agents near one side of the region, targets near the other, and every
/// radar-missile placed on the straight segment between an agent and the
/// target it is first assigned to. Targets and threats are static.
ScenarioState interposed_scenario(const ScenarioParams& params, std::uint64_t seed);

struct ModeComparison {
  RunSummary surrogate;
  RunSummary baseline;
  /// Largest distance between the two modes' positions of one agent at the
  /// same tick, over ticks where both still move it.
  double divergence = 0.0;
};

/// Largest distance between two runs' positions of one agent at the same
/// tick, over ticks where both moved it.
double trajectory_divergence(const SimulationTrace& a, const SimulationTrace& b);

/// Runs surrogate and raw-baseline control on the same scenario with
/// targets and threats frozen.
ModeComparison compare_modes(const ScenarioState& scenario, const SurrogateNet& net,
                             const SimulationConfig& config, std::uint64_t seed);

/// Runs `count` independent jobs on up to `threads` workers (0 reads
/// SWARMPATH_THREADS, default 1). Results are indexed by job, so output does
/// not depend on scheduling.
int worker_count(int requested = 0);

template <typename Result, typename Job>
std::vector<Result> parallel_map(int count, Job job, int threads = 0) {
  std::vector<Result> results(count);
  const int workers = std::min(worker_count(threads), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) results[i] = job(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          results[i] = job(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Trace files: one JSON object per line, one line per tick, preceded by a
// header line.
struct TraceWriteOptions {
  /// Include wall-clock timings; off keeps the file bit-identical across
  /// runs.
  bool include_timing = false;
  /// Manifest file name recorded in the header; empty for none.
  std::string manifest;
};
void write_trace(const SimulationTrace& trace, const std::filesystem::path& path,
                 const TraceWriteOptions& options = {});
std::string trace_line(const TickRecord& record, const TraceWriteOptions& options = {});
std::string summary_to_json(const RunSummary& summary);

}  // namespace swarmpath

#endif  // SWARMPATH_SIMULATOR_H_
