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

#include "swarmpath/convergence.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace swarmpath {

std::optional<double> compute_epsilon(double step, double delta, double b) {
  if (!(step > 0.0) || !(delta >= 0.0) || !(b >= 0.0) || !std::isfinite(step) ||
      !std::isfinite(delta) || !std::isfinite(b)) {
    return std::nullopt;
  }
  constexpr double kSqrt2 = std::numbers::sqrt2;
  const double radicand = 1.0 - 2.0 * kSqrt2 * b / step;
  if (radicand < 0.0) return std::nullopt;
  const double bracket = (1.0 - 2.0 * std::sqrt(radicand) - 2.0 * kSqrt2 * delta / step) * step * step +
                         delta * delta + 2.0 * kSqrt2 * step * delta + 4.0 * step * b;
  return -bracket;
}

double gradient_bound_limit(double step, double delta) {
  return (step * step - 2.0 * delta * delta) / (2.0 * std::numbers::sqrt2 * step);
}

ConvergenceCertificate certify(double b, const ScenarioParams& params) {
  ConvergenceCertificate c;
  c.b = b;
  c.step = params.step_length();
  c.delta = params.target_max_speed * params.dt;
  c.b_limit = gradient_bound_limit(c.step, c.delta);
  c.epsilon = compute_epsilon(c.step, c.delta, b);
  c.conditions.speed_margin = c.step > std::numbers::sqrt2 * c.delta;
  // The zero bound is admitted: a flat network is the unperturbed case.
  c.conditions.gradient_bound = b >= 0.0 && b < c.b_limit;
  c.conditions.positive_epsilon = c.epsilon.has_value() && *c.epsilon > 0.0;
  return c;
}

ConvergenceCertificate certify(const SurrogateNet& net, const ScenarioState& state,
                               const AssignmentTable& assignment,
                               const ControllerConfig& config) {
  const bool surrogate = config.mode == ControlMode::kSurrogate;
  ConvergenceCertificate c = certify(surrogate ? weight_bound(net) : 0.0, state.params);
  const std::size_t n = state.agents.size();
  c.initial_distance.assign(n, std::nullopt);
  c.tick_bound.assign(n, std::nullopt);
  const auto& p = state.params;
  for (const auto& agent : state.agents) {
    if (!agent.active()) continue;
    const auto target = assignment.target_of(agent.id);
    if (!target) continue;
    const double d0 = distance(agent.position, state.targets.at(*target).position);
    c.initial_distance[agent.id] = d0;
    if (!c.conditions.positive_epsilon) continue;
    const auto ticks = static_cast<long long>(std::ceil(d0 * d0 / *c.epsilon));
    c.tick_bound[agent.id] = ticks;
    // While the bound runs D only shrinks, so L + D stays below
    // L(0) + D(0) + ticks * step; the ramp is flat below L_bar - eta.
    if (surrogate && config.analytic_range_term &&
        !(agent.path_length + d0 + static_cast<double>(ticks) * c.step <
          p.max_range - p.smoothing_width)) {
      c.conditions.range_term_quiet = false;
    }
  }
  if (!c.holds()) std::fill(c.tick_bound.begin(), c.tick_bound.end(), std::nullopt);
  return c;
}

ConvergenceCertificate certify(const SurrogateNet& net, const ScenarioState& state,
                               const ControllerConfig& config) {
  const auto positions = state.agent_positions();
  return certify(net, state, assign(state, positions), config);
}

bool DescentReport::arrivals_within() const {
  for (const auto& a : arrivals) {
    if (!a.within) return false;
  }
  return true;
}

DescentReport monitor_descent(const SimulationTrace& trace,
                              const ConvergenceCertificate& certificate) {
  if (!certificate.epsilon) {
    throw std::invalid_argument("monitor_descent: certificate has no epsilon");
  }
  DescentReport report;
  report.epsilon = *certificate.epsilon;
  const double step = certificate.step;
  report.tolerance = 1e-9 * step * step;
  const double limit = -report.epsilon + report.tolerance;
  const auto& ticks = trace.ticks;
  for (std::size_t k = 1; k < ticks.size(); ++k) {
    if (ticks[k].tick != ticks[k - 1].tick + 1) {
      throw std::invalid_argument("monitor_descent: trace is not tick-contiguous");
    }
  }
  const std::size_t n_agents = trace.initial.agents.size();
  for (std::size_t i = 0; i < n_agents; ++i) {
    // Per-step decrease.
    for (std::size_t k = 0; k < ticks.size(); ++k) {
      const AgentRecord& now = ticks[k].agents.at(i);
      if (!now.moved) continue;
      if (now.clamp) {
        ++report.skipped_clamp;
        continue;
      }
      if (!(now.frame_distance > step)) {
        ++report.skipped_near;
        continue;
      }
      if (k + 1 >= ticks.size()) {
        ++report.skipped_other;
        continue;
      }
      const AgentRecord& next = ticks[k + 1].agents.at(i);
      if (!next.moved || next.target != now.target) {
        ++report.skipped_other;
        continue;
      }
      ++report.monitored;
      const double change = next.frame_distance * next.frame_distance -
                            now.frame_distance * now.frame_distance;
      if (change > limit) {
        report.violations.push_back({ticks[k].tick, static_cast<int>(i), change, limit});
      }
    }
    // Arrival bound per stretch on one target.
    std::size_t k = 0;
    while (k < ticks.size()) {
      const AgentRecord& first = ticks[k].agents.at(i);
      if (!first.moved) {
        ++k;
        continue;
      }
      const std::size_t start = k;
      bool clean = true;
      std::optional<int> arrival;
      std::size_t j = start;
      for (; j < ticks.size(); ++j) {
        const AgentRecord& r = ticks[j].agents.at(i);
        if (!r.moved || r.target != first.target) break;
        if (r.frame_distance <= step) {
          arrival = static_cast<int>(j - start);
          break;
        }
        if (r.clamp) clean = false;
        if (r.captured) {
          arrival = static_cast<int>(j - start + 1);
          break;
        }
      }
      if (arrival && clean) {
        ArrivalCheck a;
        a.agent_id = static_cast<int>(i);
        a.start_tick = ticks[start].tick;
        a.start_distance = first.frame_distance;
        a.arrival = *arrival;
        a.bound = report.epsilon > 0.0
                      ? a.start_distance * a.start_distance / report.epsilon
                      : std::numeric_limits<double>::infinity();
        a.within = static_cast<double>(a.arrival) < a.bound;
        report.arrivals.push_back(a);
      }
      // Skip to the end of this stretch.
      k = std::max(j, start + 1);
      while (k < ticks.size() && ticks[k].agents.at(i).moved &&
             ticks[k].agents.at(i).target == first.target) {
        ++k;
      }
    }
  }
  return report;
}

}  // namespace swarmpath
