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

#include "swarmpath/scenario.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace swarmpath {
namespace {

using nlohmann::json;

void require(bool condition, const std::string& what) {
  if (!condition) throw ValidationError(what + " violated");
}

bool finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ParseError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read_field(const json& object, const char* key, T& out) {
  if (!object.contains(key)) return;
  try {
    out = object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

ScenarioParams params_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("'params' must be an object");
  reject_unknown_keys(
      j,
      {"region_half_extent", "n_agents", "n_radar_missiles", "n_targets", "radar_radius",
       "missile_radius", "safe_distance", "v_max", "n_max", "gravity", "max_range", "k_d",
       "k_a", "k_c", "k_l", "dt", "target_max_speed", "threat_max_speed",
       "smoothing_width", "assignment_period", "assignment_scale"},
      "params");
  ScenarioParams p;
  read_field(j, "region_half_extent", p.region_half_extent);
  read_field(j, "n_agents", p.n_agents);
  read_field(j, "n_radar_missiles", p.n_radar_missiles);
  read_field(j, "n_targets", p.n_targets);
  read_field(j, "radar_radius", p.radar_radius);
  read_field(j, "missile_radius", p.missile_radius);
  read_field(j, "safe_distance", p.safe_distance);
  read_field(j, "v_max", p.v_max);
  read_field(j, "n_max", p.n_max);
  read_field(j, "gravity", p.gravity);
  read_field(j, "max_range", p.max_range);
  read_field(j, "k_d", p.k_d);
  read_field(j, "k_a", p.k_a);
  read_field(j, "k_c", p.k_c);
  read_field(j, "k_l", p.k_l);
  read_field(j, "dt", p.dt);
  read_field(j, "target_max_speed", p.target_max_speed);
  if (j.contains("threat_max_speed")) {
    double v = 0.0;
    read_field(j, "threat_max_speed", v);
    p.threat_max_speed = v;
  }
  read_field(j, "smoothing_width", p.smoothing_width);
  read_field(j, "assignment_period", p.assignment_period);
  read_field(j, "assignment_scale", p.assignment_scale);
  return p;
}

json params_to_json(const ScenarioParams& p) {
  json j = {{"region_half_extent", p.region_half_extent},
            {"n_agents", p.n_agents},
            {"n_radar_missiles", p.n_radar_missiles},
            {"n_targets", p.n_targets},
            {"radar_radius", p.radar_radius},
            {"missile_radius", p.missile_radius},
            {"safe_distance", p.safe_distance},
            {"v_max", p.v_max},
            {"n_max", p.n_max},
            {"gravity", p.gravity},
            {"max_range", p.max_range},
            {"k_d", p.k_d},
            {"k_a", p.k_a},
            {"k_c", p.k_c},
            {"k_l", p.k_l},
            {"dt", p.dt},
            {"target_max_speed", p.target_max_speed},
            {"smoothing_width", p.smoothing_width},
            {"assignment_period", p.assignment_period},
            {"assignment_scale", p.assignment_scale}};
  if (p.threat_max_speed) j["threat_max_speed"] = *p.threat_max_speed;
  return j;
}

struct EntityRecord {
  Vec2 position;
  Vec2 velocity;
  double path_length = 0.0;
  bool alive = true;
  bool captured = false;
};

std::vector<EntityRecord> entities_from_json(const json& j, const std::string& where,
                                             const std::set<std::string>& extra_keys) {
  if (!j.is_array()) throw ParseError("'" + where + "' must be an array");
  std::set<std::string> allowed = {"x", "y", "vx", "vy"};
  allowed.insert(extra_keys.begin(), extra_keys.end());
  std::vector<EntityRecord> out;
  for (const auto& item : j) {
    if (!item.is_object()) throw ParseError("entries of '" + where + "' must be objects");
    reject_unknown_keys(item, allowed, where);
    if (!item.contains("x") || !item.contains("y")) {
      throw ParseError("entry of '" + where + "' lacks x or y");
    }
    EntityRecord r;
    read_field(item, "x", r.position.x);
    read_field(item, "y", r.position.y);
    read_field(item, "vx", r.velocity.x);
    read_field(item, "vy", r.velocity.y);
    read_field(item, "path_length", r.path_length);
    read_field(item, "alive", r.alive);
    read_field(item, "captured", r.captured);
    out.push_back(r);
  }
  return out;
}

}  // namespace

double ScenarioParams::max_penalty() const {
  const double n = n_agents;
  return n * (n_radar_missiles * (k_d + k_a) + n * k_c + k_l);
}

void validate(const ScenarioParams& p) {
  require(std::isfinite(p.region_half_extent) && p.region_half_extent > 0, "region_half_extent > 0");
  require(p.n_agents >= 1, "N >= 1");
  require(p.n_radar_missiles >= 0, "M >= 0");
  require(p.n_targets >= 0, "K >= 0");
  require(p.n_targets <= p.n_agents, "K ≤ N");
  require(p.missile_radius > 0, "R_a > 0");
  require(p.radar_radius > p.missile_radius, "R_d > R_a");
  require(p.safe_distance > 0, "D_safe > 0");
  require(std::isfinite(p.v_max) && p.v_max > 0, "v_max > 0");
  require(p.n_max > 0, "n_max > 0");
  require(p.gravity > 0, "g > 0");
  require(p.max_range > 0, "L_bar > 0");
  require(p.k_d > 0, "k_d > 0");
  require(p.k_a >= p.k_d, "k_a ≥ k_d");
  require(p.k_c > 0, "k_c > 0");
  require(p.k_l > 0, "k_l > 0");
  require(std::isfinite(p.dt) && p.dt > 0, "dt > 0");
  require(p.target_max_speed >= 0, "target speed ≥ 0");
  require(p.threat_speed() >= 0, "threat speed ≥ 0");
  require(p.smoothing_width > 0, "η > 0");
  require(p.assignment_period >= 1, "assignment_period ≥ 1");
  require(p.assignment_scale > 0, "λ > 0");
}

std::vector<Vec2> ScenarioState::agent_positions() const {
  std::vector<Vec2> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.position);
  return out;
}

std::vector<Vec2> ScenarioState::threat_positions() const {
  std::vector<Vec2> out;
  out.reserve(radar_missiles.size());
  for (const auto& o : radar_missiles) out.push_back(o.position);
  return out;
}

int ScenarioState::active_agent_count() const {
  int n = 0;
  for (const auto& a : agents) n += a.active() ? 1 : 0;
  return n;
}

int ScenarioState::alive_target_count() const {
  int n = 0;
  for (const auto& t : targets) n += t.alive ? 1 : 0;
  return n;
}

void validate(const ScenarioState& s) {
  validate(s.params);
  const auto& p = s.params;
  require(static_cast<int>(s.agents.size()) == p.n_agents, "agent count = N");
  require(static_cast<int>(s.radar_missiles.size()) == p.n_radar_missiles,
          "radar-missile count = M");
  require(static_cast<int>(s.targets.size()) == p.n_targets, "target count = K");
  for (const auto& a : s.agents) {
    require(finite(a.position) && finite(a.velocity), "finite agent state");
    require(a.path_length >= 0, "path_length ≥ 0");
    if (a.active()) {
      require(a.speed() > 0, "agent speed > 0");
      require(a.speed() <= p.v_max + 1e-12, "agent speed ≤ v_max");
    }
  }
  for (const auto& o : s.radar_missiles) {
    require(finite(o.position) && finite(o.velocity), "finite radar-missile state");
  }
  for (const auto& t : s.targets) {
    require(finite(t.position) && finite(t.velocity), "finite target state");
  }
}

ScenarioState parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  reject_unknown_keys(j, {"params", "agents", "targets", "radar_missiles", "seed", "tick"},
                      "scenario");
  if (!j.contains("params")) throw ParseError("scenario lacks 'params'");

  ScenarioState s;
  s.params = params_from_json(j.at("params"));
  read_field(j, "seed", s.rng_seed);
  validate(s.params);

  const bool has_agents = j.contains("agents");
  const bool has_targets = j.contains("targets");
  const bool has_threats = j.contains("radar_missiles");
  if (!has_agents && !has_targets && !has_threats) {
    // Placement omitted: draw it from the seed.
    s = random_scenario(s.params, s.rng_seed);
    read_field(j, "tick", s.tick);
    return s;
  }
  if (!(has_agents && has_targets && has_threats)) {
    throw ParseError("'agents', 'targets' and 'radar_missiles' must be given together");
  }
  read_field(j, "tick", s.tick);

  const auto agents =
      entities_from_json(j.at("agents"), "agents", {"path_length", "alive", "captured"});
  for (std::size_t i = 0; i < agents.size(); ++i) {
    AgentState a;
    a.id = static_cast<int>(i);
    a.position = agents[i].position;
    a.velocity = agents[i].velocity;
    a.heading = std::atan2(a.velocity.y, a.velocity.x);
    a.path_length = agents[i].path_length;
    a.alive = agents[i].alive;
    a.captured = agents[i].captured;
    s.agents.push_back(a);
  }
  const auto targets = entities_from_json(j.at("targets"), "targets", {"alive"});
  for (std::size_t i = 0; i < targets.size(); ++i) {
    s.targets.push_back(
        {static_cast<int>(i), targets[i].position, targets[i].velocity, targets[i].alive});
  }
  const auto threats = entities_from_json(j.at("radar_missiles"), "radar_missiles", {});
  for (std::size_t i = 0; i < threats.size(); ++i) {
    s.radar_missiles.push_back({static_cast<int>(i), threats[i].position, threats[i].velocity});
  }
  validate(s);
  return s;
}

ScenarioState load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string scenario_to_json(const ScenarioState& s) {
  json agents = json::array();
  for (const auto& a : s.agents) {
    agents.push_back({{"x", a.position.x},
                      {"y", a.position.y},
                      {"vx", a.velocity.x},
                      {"vy", a.velocity.y},
                      {"path_length", a.path_length},
                      {"alive", a.alive},
                      {"captured", a.captured}});
  }
  json targets = json::array();
  for (const auto& t : s.targets) {
    targets.push_back({{"x", t.position.x},
                       {"y", t.position.y},
                       {"vx", t.velocity.x},
                       {"vy", t.velocity.y},
                       {"alive", t.alive}});
  }
  json threats = json::array();
  for (const auto& o : s.radar_missiles) {
    threats.push_back(
        {{"x", o.position.x}, {"y", o.position.y}, {"vx", o.velocity.x}, {"vy", o.velocity.y}});
  }
  json j = {{"params", params_to_json(s.params)},
            {"agents", agents},
            {"targets", targets},
            {"radar_missiles", threats},
            {"seed", s.rng_seed},
            {"tick", s.tick}};
  return j.dump(2);
}

void save_scenario(const ScenarioState& state, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scenario file " + path.string());
  out << scenario_to_json(state) << '\n';
}

ScenarioState random_scenario(const ScenarioParams& params, std::uint64_t seed) {
  validate(params);
  ScenarioState s;
  s.params = params;
  s.rng_seed = seed;
  Rng rng = Rng(seed).fork(0x5ce7a210);
  const double size = params.region_size();
  for (int i = 0; i < params.n_agents; ++i) {
    AgentState a;
    a.id = i;
    a.position = {rng.uniform(0.0, size), rng.uniform(0.0, size)};
    const double heading = rng.uniform(-std::numbers::pi, std::numbers::pi);
    a.velocity = {params.v_max * std::cos(heading), params.v_max * std::sin(heading)};
    a.heading = std::atan2(a.velocity.y, a.velocity.x);
    s.agents.push_back(a);
  }
  for (int j = 0; j < params.n_radar_missiles; ++j) {
    s.radar_missiles.push_back({j, {rng.uniform(0.0, size), rng.uniform(0.0, size)}, {}});
  }
  for (int k = 0; k < params.n_targets; ++k) {
    s.targets.push_back({k, {rng.uniform(0.0, size), rng.uniform(0.0, size)}, {}, true});
  }
  return s;
}

double reflect_into(double c, double size) {
  // Mirror folding with period 2 * size.
  const double period = 2.0 * size;
  double r = std::fmod(c, period);
  if (r < 0) r += period;
  return r <= size ? r : period - r;
}

ScenarioState advance_entities(const ScenarioState& state, Rng& rng) {
  ScenarioState next = state;
  const auto& p = state.params;
  const double size = p.region_size();
  auto step = [&](Vec2& position, Vec2& velocity, double speed) {
    const double length = speed * p.dt;
    // The direction is drawn even for zero-length steps so that the stream
    // does not depend on the speeds.
    const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
    if (length <= 0.0) {
      velocity = {};
      return;
    }
    const Vec2 raw = position + Vec2{length * std::cos(angle), length * std::sin(angle)};
    const Vec2 moved{reflect_into(raw.x, size), reflect_into(raw.y, size)};
    velocity = (moved - position) * (1.0 / p.dt);
    position = moved;
  };
  for (auto& t : next.targets) {
    if (t.alive) step(t.position, t.velocity, p.target_max_speed);
  }
  for (auto& o : next.radar_missiles) step(o.position, o.velocity, p.threat_speed());
  return next;
}

}  // namespace swarmpath
