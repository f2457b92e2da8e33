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

#ifndef SWARMPATH_CONVERGENCE_H_
#define SWARMPATH_CONVERGENCE_H_

#include <optional>
#include <vector>

#include "swarmpath/assignment.h"
#include "swarmpath/controller.h"
#include "swarmpath/scenario.h"
#include "swarmpath/simulator.h"
#include "swarmpath/surrogate.h"

namespace swarmpath {

// The finite-time arrival bound is stated for one unit of time per step.
// Everything here is in per-tick units: `step` is the distance an agent
// covers per tick (v_max * dt), `delta` the distance a target covers per
// tick, `b` a bound on |dF*/dx_i| and |dF*/dy_i| in raw km units.

/// epsilon = -[(1 - 2 sqrt(1 - 2 sqrt2 b / step) - 2 sqrt2 delta / step) step^2
///             + delta^2 + 2 sqrt2 step delta + 4 step b].
/// Empty when the square root is undefined or an argument is out of domain.
std::optional<double> compute_epsilon(double step, double delta, double b);

/// Upper end of the admissible gradient bound, (step^2 - 2 delta^2) / (2 sqrt2 step).
double gradient_bound_limit(double step, double delta);

struct CertificateConditions {
  /// step > sqrt2 * delta.
  bool speed_margin = false;
  /// 0 <= b < gradient_bound_limit.
  bool gradient_bound = false;
  /// epsilon defined and > 0.
  bool positive_epsilon = false;
  /// The analytic range term provably stays flat for every agent until the
  /// bound expires (always true when that term is off).
  bool range_term_quiet = true;

  bool all() const { return speed_margin && gradient_bound && positive_epsilon && range_term_quiet; }
};

struct ConvergenceCertificate {
  double b = 0.0;
  double b_limit = 0.0;
  double step = 0.0;
  double delta = 0.0;
  std::optional<double> epsilon;
  CertificateConditions conditions;
  /// Per agent id; empty entries for agents without a target.
  std::vector<std::optional<double>> initial_distance;
  /// ceil(D_i(0)^2 / epsilon) ticks, present only when the certificate holds.
  std::vector<std::optional<long long>> tick_bound;

  bool holds() const { return conditions.all(); }
};

/// Certificate from an explicit gradient bound; no per-agent data.
ConvergenceCertificate certify(double b, const ScenarioParams& params);

/// b from the network weights (zero in raw-baseline mode), per-agent
/// distances from `state` under `assignment`.
ConvergenceCertificate certify(const SurrogateNet& net, const ScenarioState& state,
                               const AssignmentTable& assignment,
                               const ControllerConfig& config = {});

/// Same, solving the initial assignment from the state.
ConvergenceCertificate certify(const SurrogateNet& net, const ScenarioState& state,
                               const ControllerConfig& config = {});

struct DescentViolation {
  int tick = 0;
  int agent_id = 0;
  double change = 0.0;  // D(k+1)^2 - D(k)^2
  double limit = 0.0;   // -epsilon + tolerance
};

struct ArrivalCheck {
  int agent_id = 0;
  /// Tick at which the agent started on this target.
  int start_tick = 0;
  double start_distance = 0.0;
  /// Ticks from start_tick until the frame distance first dropped to one
  /// step or the agent captured the target.
  int arrival = 0;
  double bound = 0.0;
  bool within = false;
};

struct DescentReport {
  double epsilon = 0.0;
  double tolerance = 0.0;
  long long monitored = 0;
  long long skipped_clamp = 0;
  long long skipped_near = 0;
  /// Steps after which the agent changed target, was captured or stopped.
  long long skipped_other = 0;
  std::vector<DescentViolation> violations;
  std::vector<ArrivalCheck> arrivals;

  bool arrivals_within() const;
  bool passed() const { return violations.empty() && arrivals_within(); }
};

/// Checks the per-tick decrease D(k+1)^2 - D(k)^2 <= -epsilon + tol on every
/// agent-tick with D(k) > step, the same target at k and k+1 and no clamp,
/// with D measured in the broadcast frame. tol = 1e-9 * step^2. Each
/// unclamped stretch on one target that ends in arrival is also checked
/// against the arrival bound. Throws std::invalid_argument if the
/// certificate has no epsilon.
DescentReport monitor_descent(const SimulationTrace& trace,
                              const ConvergenceCertificate& certificate);

}  // namespace swarmpath

#endif  // SWARMPATH_CONVERGENCE_H_
