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

#include "swarmpath/simulator.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "swarmpath/convergence.h"
#include "swarmpath/cost.h"

namespace swarmpath {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kCapture: return "capture";
    case EventKind::kLoss: return "loss";
    case EventKind::kLossIgnored: return "loss_ignored";
    case EventKind::kReassignment: return "reassignment";
    case EventKind::kClamp: return "clamp";
    case EventKind::kZeroGradient: return "zero_gradient";
    case EventKind::kResync: return "resync";
  }
  return "unknown";
}

CommandCenter::CommandCenter(const ScenarioState& initial, EstimationCase estimation)
    : estimation_(estimation), estimates_(initial.agents) {}

void CommandCenter::offset_estimate(int agent_id, const Vec2& offset) {
  estimates_.at(agent_id).position += offset;
}

const std::vector<AgentState>& CommandCenter::agents(const ScenarioState& truth) const {
  return estimation_ == EstimationCase::kExact ? truth.agents : estimates_;
}

ScenarioState CommandCenter::view(const ScenarioState& truth) const {
  ScenarioState v;
  v.tick = truth.tick;
  v.params = truth.params;
  v.radar_missiles = truth.radar_missiles;
  v.targets = truth.targets;
  v.rng_seed = truth.rng_seed;
  v.agents = agents(truth);
  return v;
}

BroadcastFrame CommandCenter::frame(const ScenarioState& truth,
                                    const AssignmentTable& assignment) const {
  BroadcastFrame f;
  f.tick = truth.tick;
  for (const auto& t : truth.targets) {
    f.target_positions.push_back(t.position);
    f.target_alive.push_back(t.alive ? 1 : 0);
  }
  f.threat_positions = truth.threat_positions();
  f.assignment = assignment;
  for (const auto& a : agents(truth)) {
    f.agent_positions.push_back(a.position);
    f.agent_lost.push_back(a.alive ? 0 : 1);
  }
  return f;
}

void CommandCenter::record_step(const ControlStep& step, const ScenarioParams& params) {
  if (estimation_ == EstimationCase::kDeadReckoned) {
    apply_step(estimates_.at(step.agent_id), step, params);
  }
}

void CommandCenter::mark_lost(int agent_id) { estimates_.at(agent_id).alive = false; }

void CommandCenter::mark_captured(int agent_id) { estimates_.at(agent_id).captured = true; }

void CommandCenter::resync(const ScenarioState& truth) {
  if (estimation_ != EstimationCase::kDeadReckoned) return;
  estimates_ = truth.agents;
  ++truth_reads_;
}

bool inject_loss(ScenarioState& state, int agent_id) {
  AgentState& agent = state.agents.at(agent_id);
  if (!agent.alive) return false;
  agent.alive = false;
  return true;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SWARMPATH_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(std::min(n, 1024L));
  }
  return 1;
}

namespace {

int default_tick_limit(const ScenarioState& state, const SurrogateNet& net,
                       const ControllerConfig& config) {
  constexpr int kFallback = 100000;
  const auto certificate = certify(net, state, config);
  if (!certificate.holds()) return kFallback;
  double total = 0.0;
  for (const auto& b : certificate.tick_bound) {
    if (b) total += static_cast<double>(*b);
  }
  const double limit = 10.0 * total;
  return limit >= static_cast<double>(std::numeric_limits<int>::max() / 2)
             ? std::numeric_limits<int>::max() / 2
             : std::max(1, static_cast<int>(limit));
}

double heading_change(const Vec2& before, const Vec2& after) {
  if (norm(before) == 0.0 || norm(after) == 0.0) return 0.0;
  return angle_between(before, after);
}

}  // namespace

SimulationTrace run(const ScenarioState& scenario, const SurrogateNet& net,
                    const SimulationConfig& config, std::uint64_t seed) {
  validate(scenario);
  const auto& params = scenario.params;
  const int n_agents = static_cast<int>(scenario.agents.size());
  const int n_threats = static_cast<int>(scenario.radar_missiles.size());
  if (net.input_dim != 2 * n_agents + 2 * n_threats) {
    throw std::invalid_argument("network input_dim " + std::to_string(net.input_dim) +
                                " does not match scenario (2N + 2M = " +
                                std::to_string(2 * n_agents + 2 * n_threats) + ")");
  }
  const ControllerConfig control = resolve(config.controller, params);
  const bool dead_reckoned = control.estimation == EstimationCase::kDeadReckoned;

  SimulationTrace trace;
  trace.seed = seed;
  trace.estimation = control.estimation;
  trace.mode = control.mode;
  trace.initial = scenario;
  trace.arrival_tick.assign(n_agents, std::nullopt);
  trace.tick_limit =
      config.tick_limit > 0 ? config.tick_limit : default_tick_limit(scenario, net, control);

  ScenarioState state = scenario;
  CommandCenter center(state, control.estimation);
  if (dead_reckoned) {
    for (int i = 0; i < n_agents && i < static_cast<int>(config.initial_estimate_offset.size());
         ++i) {
      center.offset_estimate(i, config.initial_estimate_offset[i]);
    }
  }
  const Rng root(seed);
  Rng world = root.fork(1);
  Rng actuation = root.fork(2);
  AssignmentTable table;

  const int first_tick = state.tick + 1;
  const int last_tick = state.tick + trace.tick_limit;
  for (int t = first_tick; t <= last_tick; ++t) {
    if (state.alive_target_count() == 0 || state.active_agent_count() == 0) break;
    if (!config.static_entities) state = advance_entities(state, world);
    state.tick = t;
    TickRecord record;
    record.tick = t;

    for (const auto& loss : config.losses) {
      if (loss.tick != t) continue;
      if (inject_loss(state, loss.agent_id)) {
        center.mark_lost(loss.agent_id);
        record.events.push_back({EventKind::kLoss, loss.agent_id, -1});
      } else {
        record.events.push_back({EventKind::kLossIgnored, loss.agent_id, -1});
      }
    }
    if (dead_reckoned && config.resync_period > 0 && t % config.resync_period == 0) {
      center.resync(state);
      record.events.push_back({EventKind::kResync, -1, -1});
    }

    const auto started = std::chrono::steady_clock::now();
    const ScenarioState view = center.view(state);
    const auto positions = view.agent_positions();
    AssignmentTable next =
        maybe_reassign(view, table, params.assignment_period, positions);
    if (next.tick != table.tick) record.events.push_back({EventKind::kReassignment, -1, -1});
    table = std::move(next);
    std::vector<ControlStep> steps;
    steps.reserve(n_agents);
    for (const auto& agent : view.agents) {
      if (!agent.active() || !table.target_of(agent.id)) continue;
      steps.push_back(step_agent(view, net, table, agent.id, control));
    }
    record.compute_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();

    std::vector<char> moved(n_agents, 0);
    std::vector<Vec2> previous_velocity(n_agents);
    for (const auto& step : steps) {
      AgentState& agent = state.agents[step.agent_id];
      moved[step.agent_id] = 1;
      previous_velocity[step.agent_id] = agent.velocity;
      center.record_step(step, params);
      if (dead_reckoned && config.actuation_noise > 0.0) {
        ControlStep actual = step;
        actual.unit = rotate(step.unit, config.actuation_noise * actuation.normal());
        actual.displacement = actual.unit * actual.step_size;
        apply_step(agent, actual, params);
      } else {
        apply_step(agent, step, params);
      }
      if (step.clamp_applied) record.events.push_back({EventKind::kClamp, step.agent_id, -1});
      if (step.zero_gradient) {
        record.events.push_back({EventKind::kZeroGradient, step.agent_id, -1});
      }
    }

    for (const auto& c : check_capture(state, table, control.capture_radius)) {
      center.mark_captured(c.agent_id);
      trace.arrival_tick[c.agent_id] = t;
      record.events.push_back({EventKind::kCapture, c.agent_id, c.target_id});
    }

    if (config.record_costs) {
      record.H = objective(state, table).H;
      std::vector<Vec2> agents;
      std::vector<char> active;
      for (const auto& a : view.agents) {
        agents.push_back(a.position);
        active.push_back(a.active() ? 1 : 0);
      }
      record.F_star = forward(net, pack_input(agents, active, view.threat_positions()));
    }

    std::size_t s = 0;
    const auto& estimates = center.agents(state);
    for (int i = 0; i < n_agents; ++i) {
      const AgentState& a = state.agents[i];
      AgentRecord r;
      r.id = a.id;
      r.position = a.position;
      r.heading = a.heading;
      r.path_length = a.path_length;
      r.alive = a.alive;
      r.captured = a.captured;
      r.estimate = estimates[i].position;
      if (moved[i]) {
        const ControlStep& step = steps[s++];
        r.moved = true;
        r.clamp = step.clamp_applied;
        r.target = *table.target_of(i);
        r.frame_distance =
            distance(view.agents[i].position, view.targets[r.target].position);
        r.displacement = step.displacement;
        r.heading_change = heading_change(previous_velocity[i], a.velocity);
        if (dead_reckoned && config.actuation_noise > 0.0) {
          r.displacement = a.velocity * params.dt;
        }
      }
      record.agents.push_back(r);
    }
    for (const auto& tg : state.targets) record.targets.push_back({tg.id, tg.position, tg.alive});
    for (const auto& o : state.radar_missiles) record.threats.push_back({o.id, o.position, true});
    trace.ticks.push_back(std::move(record));
  }

  trace.complete = state.alive_target_count() == 0;
  trace.truth_reads = center.truth_reads();
  trace.final_state = std::move(state);
  return trace;
}

int RunSummary::total_radar_incursions() const {
  int total = 0;
  for (int v : radar_incursion_ticks) total += v;
  return total;
}

int RunSummary::total_missile_incursions() const {
  int total = 0;
  for (int v : missile_incursion_ticks) total += v;
  return total;
}

RunSummary summarize(const SimulationTrace& trace) {
  const auto& p = trace.initial.params;
  const std::size_t n = trace.initial.agents.size();
  RunSummary s;
  s.complete = trace.complete;
  s.ticks = static_cast<int>(trace.ticks.size());
  s.arrival_tick = trace.arrival_tick;
  for (const auto& a : trace.arrival_tick) s.captures += a.has_value() ? 1 : 0;
  s.radar_incursion_ticks.assign(n, 0);
  s.missile_incursion_ticks.assign(n, 0);
  for (const auto& a : trace.final_state.agents) s.path_length.push_back(a.path_length);
  if (s.path_length.size() != n) s.path_length.assign(n, 0.0);
  const double step = p.step_length();
  double total_ns = 0.0;
  for (const auto& rec : trace.ticks) {
    total_ns += static_cast<double>(rec.compute_ns);
    s.max_compute_ms = std::max(s.max_compute_ms, rec.compute_ns * 1e-6);
    for (const auto& a : rec.agents) {
      if (!a.moved) continue;
      ++s.agent_ticks;
      if (a.clamp) ++s.clamp_ticks;
      s.max_step_error = std::max(s.max_step_error, std::abs(norm(a.displacement) - step));
      s.max_heading_change = std::max(s.max_heading_change, a.heading_change);
      bool radar = false, missile = false;
      for (const auto& o : rec.threats) {
        const double d = distance(a.position, o.position);
        radar = radar || d <= p.radar_radius;
        missile = missile || d <= p.missile_radius;
      }
      s.radar_incursion_ticks[a.id] += radar ? 1 : 0;
      s.missile_incursion_ticks[a.id] += missile ? 1 : 0;
    }
    for (std::size_t i = 0; i < rec.agents.size(); ++i) {
      if (!rec.agents[i].moved) continue;
      for (std::size_t j = i + 1; j < rec.agents.size(); ++j) {
        if (!rec.agents[j].moved) continue;
        if (distance(rec.agents[i].position, rec.agents[j].position) <= p.safe_distance) {
          ++s.collision_ticks;
        }
      }
    }
  }
  if (!trace.ticks.empty()) s.mean_compute_ms = total_ns * 1e-6 / trace.ticks.size();
  return s;
}

ScenarioState interposed_scenario(const ScenarioParams& params, std::uint64_t seed) {
  ScenarioState state = random_scenario(params, seed);
  const double size = params.region_size();
  Rng rng = Rng(seed).fork(0x1b7e5);
  for (auto& a : state.agents) {
    a.position = {rng.uniform(0.05, 0.2) * size, rng.uniform(0.1, 0.9) * size};
    const double heading = rng.uniform(-0.25, 0.25) * std::numbers::pi;
    a.heading = heading;
    a.velocity = Vec2{std::cos(heading), std::sin(heading)} * params.v_max;
  }
  for (auto& t : state.targets) {
    t.position = {rng.uniform(0.8, 0.95) * size, rng.uniform(0.1, 0.9) * size};
    t.velocity = {};
  }
  const auto table = assign(state, state.agent_positions());
  std::vector<int> assigned;
  for (const auto& a : state.agents) {
    if (table.target_of(a.id)) assigned.push_back(a.id);
  }
  for (std::size_t i = assigned.size(); i > 1; --i) {
    std::swap(assigned[i - 1], assigned[rng.below(i)]);
  }
  for (std::size_t j = 0; j < state.radar_missiles.size(); ++j) {
    auto& o = state.radar_missiles[j];
    o.velocity = {};
    if (assigned.empty()) continue;
    const auto& agent = state.agents[assigned[j % assigned.size()]];
    const Vec2 target = state.targets[*table.target_of(agent.id)].position;
    const double u = rng.uniform(0.4, 0.6);
    o.position = agent.position + (target - agent.position) * u;
  }
  return state;
}

double trajectory_divergence(const SimulationTrace& a, const SimulationTrace& b) {
  double out = 0.0;
  const std::size_t common = std::min(a.ticks.size(), b.ticks.size());
  for (std::size_t k = 0; k < common; ++k) {
    const auto& ra = a.ticks[k].agents;
    const auto& rb = b.ticks[k].agents;
    for (std::size_t i = 0; i < ra.size() && i < rb.size(); ++i) {
      if (!ra[i].moved || !rb[i].moved) continue;
      out = std::max(out, distance(ra[i].position, rb[i].position));
    }
  }
  return out;
}

ModeComparison compare_modes(const ScenarioState& scenario, const SurrogateNet& net,
                             const SimulationConfig& config, std::uint64_t seed) {
  SimulationConfig frozen = config;
  frozen.static_entities = true;
  frozen.controller.mode = ControlMode::kSurrogate;
  const SimulationTrace surrogate = run(scenario, net, frozen, seed);
  frozen.controller.mode = ControlMode::kRawBaseline;
  const SimulationTrace baseline = run(scenario, net, frozen, seed);
  ModeComparison out;
  out.surrogate = summarize(surrogate);
  out.baseline = summarize(baseline);
  out.divergence = trajectory_divergence(surrogate, baseline);
  return out;
}

}  // namespace swarmpath
