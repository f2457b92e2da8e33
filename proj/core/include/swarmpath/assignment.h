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

#ifndef SWARMPATH_ASSIGNMENT_H_
#define SWARMPATH_ASSIGNMENT_H_

#include <optional>
#include <span>
#include <vector>

#include "swarmpath/scenario.h"

namespace swarmpath {

/// One column of the square assignment problem: a real target or one of its
/// virtual copies.
struct TargetSlot {
  int slot = 0;
  int target_id = 0;
  /// 0 for the first occurrence of a target, 1 for its first copy, ...
  int copy_index = 0;

  friend bool operator==(const TargetSlot&, const TargetSlot&) = default;
};

/// Copies the targets in turn until there are `agent_count` slots:
/// 10 agents over targets {0..4} gives 0 1 2 3 4 0 1 2 3 4.
/// Throws std::invalid_argument for an empty target list or fewer agents
/// than targets.
std::vector<TargetSlot> duplicate_targets(int agent_count, std::span<const int> target_ids);

/// Drops one virtual copy after an agent loss: the newest copy of the most
/// duplicated target, preferring the latest slot on ties. Throws
/// std::invalid_argument when there is no virtual copy to drop.
std::vector<TargetSlot> remove_virtual_copy(std::span<const TargetSlot> slots);

/// Square weighted bipartite graph with a vertex labeling. Rows are agents,
/// columns are target slots.
struct LabeledBipartiteGraph {
  int size = 0;
  /// Row-major size x size weights.
  std::vector<double> weight;
  std::vector<double> row_label;
  std::vector<double> col_label;
  /// Agent id for each row.
  std::vector<int> agent_ids;
  /// Real target (and copy index) for each column.
  std::vector<TargetSlot> slots;

  double w(int row, int col) const { return weight[static_cast<std::size_t>(row) * size + col]; }
};

/// Distance below which an agent counts as sitting on a target.
inline constexpr double kCoincidentDistance = 1e-9;

/// Edge weight scale / D, capped at scale / kCoincidentDistance.
double edge_weight(const Vec2& agent, const Vec2& target, double scale);

/// Builds the graph over `agent_positions` (one row each) and the slot
/// columns, with the initial labeling l(row) = max weight in that row and
/// l(col) = 0. `target_positions` is indexed by real target id.
LabeledBipartiteGraph build_graph(std::span<const Vec2> agent_positions,
                                  std::span<const int> agent_ids,
                                  std::span<const Vec2> target_positions,
                                  std::span<const TargetSlot> slots, double scale);

struct Matching {
  /// Column matched to each row.
  std::vector<int> col_of_row;
  double total_weight = 0.0;
  /// Final labeling; every edge satisfies row + col >= weight and matched
  /// edges are tight, which certifies optimality.
  std::vector<double> row_label;
  std::vector<double> col_label;
  int label_updates = 0;
};

/// Maximum-weight perfect matching by the Hungarian method (alternating
/// trees grown from each free row, label improvement by the minimum slack).
/// O(n^3). Slack comparisons use a small relative tolerance and scan in
/// ascending index order, so ties resolve toward lower indices and toward
/// keeping existing matches. Throws std::invalid_argument for a malformed
/// graph.
Matching solve_matching(const LabeledBipartiteGraph& graph);

/// Agent -> real target map produced by one assignment event.
struct AssignmentTable {
  /// Indexed by agent id; empty for agents not taking part.
  std::vector<std::optional<int>> target_of_agent;
  int tick = -1;
  double total_weight = 0.0;
  /// Participants at solve time, used to detect membership changes.
  std::vector<int> agent_ids;
  std::vector<int> target_ids;
  std::vector<TargetSlot> slots;

  bool empty() const { return tick < 0; }
  std::optional<int> target_of(int agent_id) const;
};

AssignmentTable solve_assignment(const LabeledBipartiteGraph& graph, int tick,
                                 int agent_count);

/// Runs duplicate_targets -> build_graph -> solve_assignment over the active
/// agents and alive targets, using `agent_positions` (true positions, or the
/// command center's estimates) indexed by agent id.
AssignmentTable assign(const ScenarioState& state, std::span<const Vec2> agent_positions);

/// Whether a fresh solve is due: first call, tick a multiple of the period,
/// or a change in the set of active agents or alive targets.
bool reassignment_due(const ScenarioState& state, const AssignmentTable& table, int period);

AssignmentTable maybe_reassign(const ScenarioState& state, const AssignmentTable& table,
                               int period, std::span<const Vec2> agent_positions);
AssignmentTable maybe_reassign(const ScenarioState& state, const AssignmentTable& table,
                               int period);

}  // namespace swarmpath

#endif  // SWARMPATH_ASSIGNMENT_H_
