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

#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "swarmpath/simulator.h"

namespace swarmpath {

namespace {

using nlohmann::json;

json xy(const Vec2& v) { return json::array({v.x, v.y}); }

json optional_ticks(const std::vector<std::optional<int>>& ticks) {
  json out = json::array();
  for (const auto& t : ticks) out.push_back(t ? json(*t) : json(nullptr));
  return out;
}

}  // namespace

std::string trace_line(const TickRecord& record, const TraceWriteOptions& options) {
  json agents = json::array();
  for (const auto& a : record.agents) {
    agents.push_back({{"id", a.id},
                      {"x", a.position.x},
                      {"y", a.position.y},
                      {"psi", a.heading},
                      {"L", a.path_length},
                      {"alive", a.alive},
                      {"captured", a.captured},
                      {"clamp", a.clamp},
                      {"moved", a.moved},
                      {"target", a.target},
                      {"frame_distance", a.frame_distance},
                      {"est", xy(a.estimate)}});
  }
  json targets = json::array();
  for (const auto& t : record.targets) {
    targets.push_back({{"id", t.id}, {"x", t.position.x}, {"y", t.position.y}, {"alive", t.alive}});
  }
  json threats = json::array();
  for (const auto& o : record.threats) {
    threats.push_back({{"id", o.id}, {"x", o.position.x}, {"y", o.position.y}});
  }
  json events = json::array();
  for (const auto& e : record.events) {
    json ev = {{"kind", to_string(e.kind)}};
    if (e.agent_id >= 0) ev["agent"] = e.agent_id;
    if (e.target_id >= 0) ev["target"] = e.target_id;
    events.push_back(std::move(ev));
  }
  json line = {{"tick", record.tick}, {"agents", std::move(agents)},
               {"targets", std::move(targets)}, {"threats", std::move(threats)},
               {"H", record.H}, {"F_star", record.F_star}, {"events", std::move(events)}};
  if (options.include_timing) line["compute_ns"] = record.compute_ns;
  return line.dump();
}

void write_trace(const SimulationTrace& trace, const std::filesystem::path& path,
                 const TraceWriteOptions& options) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file " + path.string());
  json header = {{"format", "swarmpath-trace"},
                 {"version", 1},
                 {"seed", trace.seed},
                 {"case", static_cast<int>(trace.estimation)},
                 {"mode", trace.mode == ControlMode::kSurrogate ? "surrogate" : "raw-baseline"},
                 {"tick_limit", trace.tick_limit},
                 {"initial", json::parse(scenario_to_json(trace.initial))}};
  if (!options.manifest.empty()) header["manifest"] = options.manifest;
  out << header.dump() << '\n';
  for (const auto& record : trace.ticks) out << trace_line(record, options) << '\n';
  json footer = {{"end", true},
                 {"complete", trace.complete},
                 {"ticks", trace.ticks.size()},
                 {"arrival_tick", optional_ticks(trace.arrival_tick)}};
  out << footer.dump() << '\n';
}

std::string summary_to_json(const RunSummary& s) {
  json j = {{"complete", s.complete},
            {"ticks", s.ticks},
            {"captures", s.captures},
            {"arrival_tick", optional_ticks(s.arrival_tick)},
            {"path_length", s.path_length},
            {"radar_incursion_ticks", s.radar_incursion_ticks},
            {"missile_incursion_ticks", s.missile_incursion_ticks},
            {"collision_ticks", s.collision_ticks},
            {"agent_ticks", s.agent_ticks},
            {"clamp_ticks", s.clamp_ticks},
            {"mean_compute_ms", s.mean_compute_ms},
            {"max_compute_ms", s.max_compute_ms},
            {"max_step_error", s.max_step_error},
            {"max_heading_change", s.max_heading_change}};
  return j.dump(2);
}

}  // namespace swarmpath
