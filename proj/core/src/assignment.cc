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

#include "swarmpath/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarmpath {

std::vector<TargetSlot> duplicate_targets(int agent_count, std::span<const int> target_ids) {
  if (target_ids.empty()) throw std::invalid_argument("duplicate_targets: no targets");
  const int k = static_cast<int>(target_ids.size());
  if (agent_count < k) {
    throw std::invalid_argument("duplicate_targets: fewer agents than targets");
  }
  std::vector<TargetSlot> slots;
  slots.reserve(agent_count);
  for (int s = 0; s < agent_count; ++s) {
    slots.push_back({s, target_ids[s % k], s / k});
  }
  return slots;
}

std::vector<TargetSlot> remove_virtual_copy(std::span<const TargetSlot> slots) {
  int victim = -1;
  int best_copies = 0;
  for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
    // copy_index is the running count of earlier copies of the same target,
    // so the largest index (latest slot on ties) marks the newest copy of the
    // most duplicated target.
    if (slots[s].copy_index > 0 && slots[s].copy_index >= best_copies) {
      best_copies = slots[s].copy_index;
      victim = s;
    }
  }
  if (victim < 0) throw std::invalid_argument("remove_virtual_copy: no virtual copies");
  std::vector<TargetSlot> out;
  out.reserve(slots.size() - 1);
  for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
    if (s == victim) continue;
    TargetSlot slot = slots[s];
    slot.slot = static_cast<int>(out.size());
    out.push_back(slot);
  }
  return out;
}

double edge_weight(const Vec2& agent, const Vec2& target, double scale) {
  const double d = distance(agent, target);
  return scale / std::max(d, kCoincidentDistance);
}

LabeledBipartiteGraph build_graph(std::span<const Vec2> agent_positions,
                                  std::span<const int> agent_ids,
                                  std::span<const Vec2> target_positions,
                                  std::span<const TargetSlot> slots, double scale) {
  const int n = static_cast<int>(agent_positions.size());
  if (static_cast<int>(slots.size()) != n || static_cast<int>(agent_ids.size()) != n) {
    throw std::invalid_argument("build_graph: graph is not square");
  }
  LabeledBipartiteGraph g;
  g.size = n;
  g.weight.resize(static_cast<std::size_t>(n) * n);
  g.row_label.assign(n, 0.0);
  g.col_label.assign(n, 0.0);
  g.agent_ids.assign(agent_ids.begin(), agent_ids.end());
  g.slots.assign(slots.begin(), slots.end());
  for (int i = 0; i < n; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      const Vec2& t = target_positions[slots[j].target_id];
      const double w = edge_weight(agent_positions[i], t, scale);
      g.weight[static_cast<std::size_t>(i) * n + j] = w;
      best = std::max(best, w);
    }
    g.row_label[i] = n > 0 ? best : 0.0;
  }
  return g;
}

Matching solve_matching(const LabeledBipartiteGraph& g) {
  const int n = g.size;
  if (n < 0 || g.weight.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("solve_matching: graph is not square");
  }
  Matching m;
  m.col_of_row.assign(n, -1);
  if (n == 0) return m;

  double scale = 0.0;
  for (double w : g.weight) {
    if (!std::isfinite(w)) throw std::invalid_argument("solve_matching: non-finite weight");
    scale = std::max(scale, std::abs(w));
  }
  const double tol = 1e-12 * std::max(1.0, scale);

  std::vector<double> lx(n), ly(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) best = std::max(best, g.w(i, j));
    lx[i] = best;
  }
  std::vector<int> xy(n, -1), yx(n, -1);
  std::vector<double> slack(n);
  std::vector<int> slack_row(n), parent_row(n);
  std::vector<char> in_s(n), in_t(n);

  for (int root = 0; root < n; ++root) {
    std::fill(in_s.begin(), in_s.end(), 0);
    std::fill(in_t.begin(), in_t.end(), 0);
    in_s[root] = 1;
    for (int j = 0; j < n; ++j) {
      slack[j] = lx[root] + ly[j] - g.w(root, j);
      slack_row[j] = root;
    }
    int free_col = -1;
    while (free_col < 0) {
      int j = -1;
      for (int c = 0; c < n; ++c) {
        if (!in_t[c] && slack[c] <= tol) {
          j = c;
          break;
        }
      }
      if (j < 0) {
        // No tight edge leaves the tree: improve the labeling by the
        // minimum slack between S and the columns outside T.
        double delta = std::numeric_limits<double>::infinity();
        for (int c = 0; c < n; ++c) {
          if (!in_t[c]) delta = std::min(delta, slack[c]);
        }
        for (int i = 0; i < n; ++i) {
          if (in_s[i]) lx[i] -= delta;
        }
        for (int c = 0; c < n; ++c) {
          if (in_t[c]) {
            ly[c] += delta;
          } else {
            slack[c] -= delta;
          }
        }
        ++m.label_updates;
        continue;
      }
      in_t[j] = 1;
      parent_row[j] = slack_row[j];
      if (yx[j] < 0) {
        free_col = j;
        break;
      }
      const int next_row = yx[j];
      in_s[next_row] = 1;
      for (int c = 0; c < n; ++c) {
        if (in_t[c]) continue;
        const double s = lx[next_row] + ly[c] - g.w(next_row, c);
        if (s < slack[c] - tol) {
          slack[c] = s;
          slack_row[c] = next_row;
        }
      }
    }
    // Flip the augmenting path ending at free_col.
    int col = free_col;
    while (col >= 0) {
      const int row = parent_row[col];
      const int previous = xy[row];
      xy[row] = col;
      yx[col] = row;
      col = previous;
    }
  }

  m.col_of_row = xy;
  for (int i = 0; i < n; ++i) m.total_weight += g.w(i, xy[i]);
  m.row_label = std::move(lx);
  m.col_label = std::move(ly);
  return m;
}

std::optional<int> AssignmentTable::target_of(int agent_id) const {
  if (agent_id < 0 || agent_id >= static_cast<int>(target_of_agent.size())) return std::nullopt;
  return target_of_agent[agent_id];
}

AssignmentTable solve_assignment(const LabeledBipartiteGraph& graph, int tick, int agent_count) {
  const Matching m = solve_matching(graph);
  AssignmentTable table;
  table.tick = tick;
  table.target_of_agent.assign(agent_count, std::nullopt);
  table.slots = graph.slots;
  for (int row = 0; row < graph.size; ++row) {
    const int agent = graph.agent_ids[row];
    if (agent < 0) continue;  // padding row
    table.target_of_agent[agent] = graph.slots[m.col_of_row[row]].target_id;
    table.total_weight += graph.w(row, m.col_of_row[row]);
  }
  return table;
}

namespace {

std::vector<int> active_agent_ids(const ScenarioState& state) {
  std::vector<int> ids;
  for (const auto& a : state.agents) {
    if (a.active()) ids.push_back(a.id);
  }
  return ids;
}

std::vector<int> alive_target_ids(const ScenarioState& state) {
  std::vector<int> ids;
  for (const auto& t : state.targets) {
    if (t.alive) ids.push_back(t.id);
  }
  return ids;
}

}  // namespace

AssignmentTable assign(const ScenarioState& state, std::span<const Vec2> agent_positions) {
  const auto agents = active_agent_ids(state);
  const auto targets = alive_target_ids(state);
  const int agent_count = static_cast<int>(state.agents.size());

  AssignmentTable table;
  table.tick = state.tick;
  table.target_of_agent.assign(agent_count, std::nullopt);
  table.agent_ids = agents;
  table.target_ids = targets;
  if (agents.empty() || targets.empty()) return table;

  std::vector<Vec2> target_positions(state.targets.size());
  for (const auto& t : state.targets) target_positions[t.id] = t.position;

  std::vector<Vec2> rows;
  std::vector<int> row_ids = agents;
  for (int id : agents) rows.push_back(agent_positions[id]);

  std::vector<TargetSlot> slots;
  if (agents.size() >= targets.size()) {
    slots = duplicate_targets(static_cast<int>(agents.size()), targets);
  } else {
    // More targets than agents after losses: one slot per target and
    // zero-weight padding rows, so some targets stay uncovered.
    for (int s = 0; s < static_cast<int>(targets.size()); ++s) slots.push_back({s, targets[s], 0});
  }
  LabeledBipartiteGraph graph;
  if (rows.size() == slots.size()) {
    graph = build_graph(rows, row_ids, target_positions, slots, state.params.assignment_scale);
  } else {
    const int n = static_cast<int>(slots.size());
    graph.size = n;
    graph.weight.assign(static_cast<std::size_t>(n) * n, 0.0);
    graph.row_label.assign(n, 0.0);
    graph.col_label.assign(n, 0.0);
    graph.agent_ids.assign(n, -1);
    graph.slots = slots;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      graph.agent_ids[i] = row_ids[i];
      double best = 0.0;
      for (int j = 0; j < n; ++j) {
        const double w = edge_weight(rows[i], target_positions[slots[j].target_id],
                                     state.params.assignment_scale);
        graph.weight[static_cast<std::size_t>(i) * n + j] = w;
        best = std::max(best, w);
      }
      graph.row_label[i] = best;
    }
  }
  AssignmentTable solved = solve_assignment(graph, state.tick, agent_count);
  solved.agent_ids = agents;
  solved.target_ids = targets;
  return solved;
}

bool reassignment_due(const ScenarioState& state, const AssignmentTable& table, int period) {
  if (table.empty()) return true;
  if (period >= 1 && state.tick % period == 0) return true;
  return active_agent_ids(state) != table.agent_ids || alive_target_ids(state) != table.target_ids;
}

AssignmentTable maybe_reassign(const ScenarioState& state, const AssignmentTable& table,
                               int period, std::span<const Vec2> agent_positions) {
  if (!reassignment_due(state, table, period)) return table;
  return assign(state, agent_positions);
}

AssignmentTable maybe_reassign(const ScenarioState& state, const AssignmentTable& table,
                               int period) {
  const auto positions = state.agent_positions();
  return maybe_reassign(state, table, period, positions);
}

}  // namespace swarmpath
