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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "swarmpath/convergence.h"
#include "swarmpath/scenario.h"
#include "swarmpath/simulator.h"
#include "swarmpath/surrogate.h"

#ifndef SWARMPATH_VERSION
#define SWARMPATH_VERSION "unknown"
#endif

namespace swarmpath::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "table";
  std::string manifest;
  bool json() const { return format == "json"; }
};

json make_manifest(const std::string& command, const json& config,
                   const std::vector<fs::path>& inputs, const std::vector<fs::path>& outputs,
                   std::uint64_t seed, const std::vector<std::string>& args) {
  json in = json::object();
  for (const auto& p : inputs) in[p.string()] = file_hash(p);
  json out = json::array();
  for (const auto& p : outputs) out.push_back(p.string());
  return {{"command", command}, {"args", args},   {"config", config},
          {"inputs", in},       {"outputs", out}, {"seed", seed},
          {"tool_version", SWARMPATH_VERSION}};
}

fs::path manifest_path(const Common& common, const fs::path& first_output) {
  if (!common.manifest.empty()) return common.manifest;
  fs::path p = first_output;
  p += ".manifest.json";
  return p;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text << '\n';
}

SurrogateNet load_net(const std::string& weights, bool zero, const ScenarioState& scenario) {
  if (!weights.empty()) return load_weights(weights).net;
  if (zero) {
    return zero_net(static_cast<int>(scenario.agents.size()),
                    static_cast<int>(scenario.radar_missiles.size()));
  }
  throw UsageError("one of --weights or --zero-net is required");
}

void check_fit(const SurrogateNet& net, const ScenarioState& scenario) {
  const int expected =
      2 * static_cast<int>(scenario.agents.size()) + 2 * static_cast<int>(scenario.radar_missiles.size());
  if (net.input_dim != expected) {
    throw UsageError("weights expect input_dim " + std::to_string(net.input_dim) +
                     " but the scenario has 2N + 2M = " + std::to_string(expected));
  }
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string fmt_tick(const std::optional<int>& t) { return t ? std::to_string(*t) : "-"; }

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << std::right << std::setw(static_cast<int>(width[c])) << r[c] << (c + 1 < r.size() ? "  " : "\n");
    }
  };
  line(header);
  for (const auto& r : rows) line(r);
}

json report_json(const TrainingReport& r) {
  return {{"train_mse", r.train_mse},           {"validation_mse", r.validation_mse},
          {"test_mse", r.test_mse},             {"baseline_test_mse", r.baseline_test_mse},
          {"epochs", r.epochs},                 {"best_epoch", r.best_epoch},
          {"dataset_size", r.dataset_size},     {"seconds", r.seconds}};
}

json certificate_json(const ConvergenceCertificate& c) {
  json agents = json::array();
  for (std::size_t i = 0; i < c.initial_distance.size(); ++i) {
    agents.push_back({{"agent", i},
                      {"initial_distance", c.initial_distance[i] ? json(*c.initial_distance[i]) : json(nullptr)},
                      {"tick_bound", c.tick_bound[i] ? json(*c.tick_bound[i]) : json(nullptr)}});
  }
  return {{"b", c.b},
          {"b_limit", c.b_limit},
          {"step", c.step},
          {"delta", c.delta},
          {"epsilon", c.epsilon ? json(*c.epsilon) : json(nullptr)},
          {"conditions",
           {{"speed_margin", c.conditions.speed_margin},
            {"gradient_bound", c.conditions.gradient_bound},
            {"positive_epsilon", c.conditions.positive_epsilon},
            {"range_term_quiet", c.conditions.range_term_quiet}}},
          {"holds", c.holds()},
          {"agents", agents}};
}

void print_certificate(std::ostream& out, const ConvergenceCertificate& c) {
  auto yes = [](bool v) { return std::string(v ? "yes" : "NO"); };
  print_rows(out, {{"gradient bound b", fmt(c.b)},
                   {"b limit", fmt(c.b_limit)},
                   {"step per tick (km)", fmt(c.step)},
                   {"target step per tick (km)", fmt(c.delta)},
                   {"epsilon", c.epsilon ? fmt(*c.epsilon) : "undefined"},
                   {"speed margin", yes(c.conditions.speed_margin)},
                   {"gradient bound ok", yes(c.conditions.gradient_bound)},
                   {"epsilon > 0", yes(c.conditions.positive_epsilon)},
                   {"range term quiet", yes(c.conditions.range_term_quiet)},
                   {"certificate holds", yes(c.holds())}});
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < c.initial_distance.size(); ++i) {
    rows.push_back({std::to_string(i), c.initial_distance[i] ? fmt(*c.initial_distance[i]) : "-",
                    c.tick_bound[i] ? std::to_string(*c.tick_bound[i]) : "-"});
  }
  if (!rows.empty()) print_table(out, {"agent", "D(0) km", "tick bound"}, rows);
}

void write_paths(const SimulationTrace& trace, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << std::setprecision(17) << "kind,id,tick,x,y\n";
  for (const auto& a : trace.initial.agents) {
    out << "agent," << a.id << ",0," << a.position.x << ',' << a.position.y << '\n';
  }
  for (const auto& rec : trace.ticks) {
    for (const auto& a : rec.agents) {
      if (a.moved) out << "agent," << a.id << ',' << rec.tick << ',' << a.position.x << ',' << a.position.y << '\n';
    }
    for (const auto& t : rec.targets) {
      if (t.alive) out << "target," << t.id << ',' << rec.tick << ',' << t.position.x << ',' << t.position.y << '\n';
    }
    for (const auto& o : rec.threats) {
      out << "threat," << o.id << ',' << rec.tick << ',' << o.position.x << ',' << o.position.y << '\n';
    }
  }
}

ControlMode parse_mode(const std::string& s) {
  return s == "raw-baseline" ? ControlMode::kRawBaseline : ControlMode::kSurrogate;
}

// --- train -----------------------------------------------------------------

struct TrainArgs {
  std::string scenario, out;
  long long samples = 100000;
  int hidden = 75, epochs = 1000, batch = 256, patience = 20;
  std::uint64_t seed = 1;
  std::string optimizer = "momentum", init = "random";
  double lr = 1e-2, lr_decay = 0.997;
  bool include_range = false;
};

int cmd_train(const TrainArgs& a, const Common& common, const std::vector<std::string>& argv,
              std::ostream& out) {
  const ScenarioState scenario = load_scenario(a.scenario);
  DatasetOptions options;
  options.include_range_term = a.include_range;
  const Dataset data = generate_dataset(scenario.params, static_cast<std::size_t>(a.samples), a.seed, options);
  // The dataset only depends on the parameters; the layout sizes come from
  // the scenario file.
  TrainerConfig cfg;
  cfg.hidden = a.hidden;
  cfg.max_epochs = a.epochs;
  cfg.seed = a.seed;
  cfg.batch_size = a.batch;
  cfg.patience = a.patience;
  cfg.learning_rate = a.lr;
  cfg.learning_rate_decay = a.lr_decay;
  cfg.optimizer = a.optimizer == "adam" ? Optimizer::kAdam : Optimizer::kMomentum;
  cfg.init = a.init == "pairwise" ? InitScheme::kPairwise : InitScheme::kRandom;
  auto [net, report] = train(data, cfg);

  const json config = {{"scenario", a.scenario}, {"samples", a.samples}, {"hidden", a.hidden},
                       {"epochs", a.epochs},     {"batch", a.batch},     {"patience", a.patience},
                       {"optimizer", a.optimizer}, {"init", a.init},    {"lr", a.lr},
                       {"lr_decay", a.lr_decay}, {"include_range_term", a.include_range},
                       {"dataset_hash", net.dataset_hash}};
  const fs::path mpath = manifest_path(common, a.out);
  const json manifest = make_manifest("train", config, {a.scenario}, {a.out}, a.seed, argv);
  WeightsFile file;
  file.net = std::move(net);
  // Wall-clock time stays out of the weights file so reruns hash equal.
  file.report = report;
  file.report.seconds = 0.0;
  file.has_report = true;
  file.manifest = manifest.dump();
  save_weights(file, a.out);
  json m = manifest;
  m["report"] = report_json(report);
  write_text(mpath, m.dump(2));

  if (common.json()) {
    out << json{{"weights", a.out}, {"manifest", mpath.string()}, {"report", report_json(report)}}.dump(2) << '\n';
  } else {
    print_rows(out, {{"weights", a.out},
                     {"samples", std::to_string(report.dataset_size)},
                     {"epochs", std::to_string(report.epochs) + " (best " + std::to_string(report.best_epoch) + ")"},
                     {"train MSE", fmt(report.train_mse)},
                     {"validation MSE", fmt(report.validation_mse)},
                     {"test MSE", fmt(report.test_mse)},
                     {"constant-predictor test MSE", fmt(report.baseline_test_mse)},
                     {"seconds", fmt(report.seconds, 4)}});
  }
  return kExitOk;
}

// --- simulate --------------------------------------------------------------

struct SimArgs {
  std::string scenario, weights, trace, summary, paths, mode = "surrogate";
  bool zero_net = false, timing = false;
  int estimation = 1, ticks_max = 0, resync = 0;
  std::uint64_t seed = 1;
  double capture_radius = 0.0, actuation_noise = 0.0;
};

int cmd_simulate(const SimArgs& a, const Common& common, const std::vector<std::string>& argv,
                 std::ostream& out) {
  const ScenarioState scenario = load_scenario(a.scenario);
  const SurrogateNet net = load_net(a.weights, a.zero_net, scenario);
  check_fit(net, scenario);
  SimulationConfig cfg;
  cfg.controller.mode = parse_mode(a.mode);
  cfg.controller.estimation = a.estimation == 2 ? EstimationCase::kDeadReckoned : EstimationCase::kExact;
  cfg.controller.capture_radius = a.capture_radius;
  cfg.tick_limit = a.ticks_max;
  cfg.resync_period = a.resync;
  cfg.actuation_noise = a.actuation_noise;
  const SimulationTrace trace = run(scenario, net, cfg, a.seed);
  const RunSummary summary = summarize(trace);
  const auto certificate = certify(net, scenario, resolve(cfg.controller, scenario.params));

  std::vector<fs::path> outputs;
  for (const auto& p : {a.trace, a.summary, a.paths}) {
    if (!p.empty()) outputs.emplace_back(p);
  }
  std::vector<fs::path> inputs{a.scenario};
  if (!a.weights.empty()) inputs.emplace_back(a.weights);
  const json config = {{"scenario", a.scenario}, {"weights", a.weights}, {"zero_net", a.zero_net},
                       {"case", a.estimation},   {"mode", a.mode},       {"ticks_max", trace.tick_limit},
                       {"resync", a.resync},     {"capture_radius", a.capture_radius},
                       {"actuation_noise", a.actuation_noise}, {"timing", a.timing}};
  const json manifest = make_manifest("simulate", config, inputs, outputs, a.seed, argv);
  std::string mname;
  if (!outputs.empty()) {
    const fs::path mpath = manifest_path(common, outputs.front());
    write_text(mpath, manifest.dump(2));
    mname = mpath.filename().string();
  }
  if (!a.trace.empty()) write_trace(trace, a.trace, {a.timing, mname});
  const json summary_doc = {{"summary", json::parse(summary_to_json(summary))},
                            {"certificate", certificate_json(certificate)},
                            {"manifest", manifest}};
  if (!a.summary.empty()) write_text(a.summary, summary_doc.dump(2));
  if (!a.paths.empty()) write_paths(trace, a.paths);

  if (common.json()) {
    out << summary_doc.dump(2) << '\n';
  } else {
    print_rows(out, {{"complete", summary.complete ? "yes" : "no"},
                     {"ticks", std::to_string(summary.ticks)},
                     {"captures", std::to_string(summary.captures)},
                     {"radar incursion ticks", std::to_string(summary.total_radar_incursions())},
                     {"missile incursion ticks", std::to_string(summary.total_missile_incursions())},
                     {"collision ticks", std::to_string(summary.collision_ticks)},
                     {"mean compute (ms/tick)", fmt(summary.mean_compute_ms, 4)},
                     {"max compute (ms/tick)", fmt(summary.max_compute_ms, 4)}});
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < summary.arrival_tick.size(); ++i) {
      rows.push_back({std::to_string(i), fmt_tick(summary.arrival_tick[i]), fmt(summary.path_length[i])});
    }
    print_table(out, {"agent", "arrival tick", "path km"}, rows);
  }
  return kExitOk;
}

// --- compare ---------------------------------------------------------------

struct CompareArgs {
  std::string scenario, weights, paths_dir;
  bool zero_net = false;
  int seeds = 0, ticks_max = 0;
  std::uint64_t seed = 1;
};

int cmd_compare(const CompareArgs& a, const Common& common, const std::vector<std::string>& argv,
                std::ostream& out, std::ostream& err) {
  const ScenarioState scenario = load_scenario(a.scenario);
  const SurrogateNet net = load_net(a.weights, a.zero_net, scenario);
  check_fit(net, scenario);
  const auto& p = scenario.params;
  if (p.target_max_speed > 0.0 || p.threat_speed() > 0.0) {
    err << "warning: scenario has moving entities; targets and threats are frozen for the comparison\n";
  }
  const int rows = a.seeds > 0 ? a.seeds : 1;
  SimulationConfig cfg;
  cfg.static_entities = true;
  cfg.tick_limit = a.ticks_max;
  struct Row {
    std::uint64_t seed = 0;
    ModeComparison cmp;
  };
  const auto results = parallel_map<Row>(rows, [&](int k) {
    Row r;
    r.seed = a.seed + static_cast<std::uint64_t>(k);
    const ScenarioState s = a.seeds > 0 ? interposed_scenario(p, r.seed) : scenario;
    SimulationConfig c = cfg;
    c.controller.mode = ControlMode::kSurrogate;
    const auto sur = run(s, net, c, r.seed);
    c.controller.mode = ControlMode::kRawBaseline;
    const auto base = run(s, net, c, r.seed);
    r.cmp.surrogate = summarize(sur);
    r.cmp.baseline = summarize(base);
    r.cmp.divergence = trajectory_divergence(sur, base);
    if (!a.paths_dir.empty()) {
      write_paths(sur, fs::path(a.paths_dir) / ("compare_" + std::to_string(r.seed) + "_surrogate.csv"));
      write_paths(base, fs::path(a.paths_dir) / ("compare_" + std::to_string(r.seed) + "_baseline.csv"));
    }
    return r;
  });

  auto total_path = [](const RunSummary& s) {
    double t = 0.0;
    for (double v : s.path_length) t += v;
    return t;
  };
  json table = json::array();
  std::vector<std::vector<std::string>> text;
  for (const auto& r : results) {
    const auto& s = r.cmp.surrogate;
    const auto& b = r.cmp.baseline;
    table.push_back({{"seed", r.seed},
                     {"surrogate", json::parse(summary_to_json(s))},
                     {"baseline", json::parse(summary_to_json(b))},
                     {"divergence", r.cmp.divergence}});
    text.push_back({std::to_string(r.seed), std::to_string(s.total_radar_incursions()),
                    std::to_string(s.total_missile_incursions()), std::to_string(s.captures),
                    fmt(total_path(s)), std::to_string(b.total_radar_incursions()),
                    std::to_string(b.total_missile_incursions()), std::to_string(b.captures),
                    fmt(total_path(b)), fmt(r.cmp.divergence)});
  }
  const json config = {{"scenario", a.scenario}, {"weights", a.weights}, {"zero_net", a.zero_net},
                       {"seeds", a.seeds},       {"ticks_max", a.ticks_max}, {"paths_dir", a.paths_dir}};
  std::vector<fs::path> inputs{a.scenario};
  if (!a.weights.empty()) inputs.emplace_back(a.weights);
  const json manifest = make_manifest("compare", config, inputs, {}, a.seed, argv);
  if (!a.paths_dir.empty()) {
    write_text(manifest_path(common, fs::path(a.paths_dir) / "compare"), manifest.dump(2));
  }
  if (common.json()) {
    out << json{{"rows", table}, {"manifest", manifest}}.dump(2) << '\n';
  } else {
    print_table(out,
                {"seed", "sur radar", "sur missile", "sur caps", "sur path", "base radar",
                 "base missile", "base caps", "base path", "divergence"},
                text);
  }
  return kExitOk;
}

// --- certify ---------------------------------------------------------------

struct CertifyArgs {
  std::string scenario, weights, mode = "surrogate";
  bool zero_net = false, verify = false, strict = false;
  int seeds = 1, ticks_max = 0;
  std::uint64_t seed = 1;
};

int cmd_certify(const CertifyArgs& a, const Common& common, const std::vector<std::string>& argv,
                std::ostream& out) {
  const ScenarioState scenario = load_scenario(a.scenario);
  const SurrogateNet net = load_net(a.weights, a.zero_net, scenario);
  check_fit(net, scenario);
  ControllerConfig control;
  control.mode = parse_mode(a.mode);
  const auto certificate = certify(net, scenario, resolve(control, scenario.params));
  json doc = {{"certificate", certificate_json(certificate)}};

  bool verify_ok = true;
  if (a.verify) {
    if (!certificate.epsilon) {
      doc["verify"] = {{"skipped", "epsilon undefined"}};
      verify_ok = false;
    } else {
      SimulationConfig cfg;
      cfg.controller = control;
      cfg.tick_limit = a.ticks_max;
      const auto reports = parallel_map<DescentReport>(a.seeds, [&](int k) {
        const auto trace = run(scenario, net, cfg, a.seed + static_cast<std::uint64_t>(k));
        return monitor_descent(trace, certificate);
      });
      long long monitored = 0, clamp = 0, violations = 0, arrivals = 0, late = 0;
      for (const auto& r : reports) {
        monitored += r.monitored;
        clamp += r.skipped_clamp;
        violations += static_cast<long long>(r.violations.size());
        arrivals += static_cast<long long>(r.arrivals.size());
        for (const auto& x : r.arrivals) late += x.within ? 0 : 1;
      }
      verify_ok = violations == 0 && late == 0;
      doc["verify"] = {{"seeds", a.seeds},           {"monitored_agent_ticks", monitored},
                       {"clamped_ticks", clamp},     {"violations", violations},
                       {"arrivals_checked", arrivals}, {"arrivals_over_bound", late},
                       {"passed", verify_ok}};
    }
  }
  std::vector<fs::path> inputs{a.scenario};
  if (!a.weights.empty()) inputs.emplace_back(a.weights);
  const json config = {{"scenario", a.scenario}, {"weights", a.weights}, {"zero_net", a.zero_net},
                       {"mode", a.mode},         {"verify", a.verify},   {"seeds", a.seeds},
                       {"strict", a.strict},     {"ticks_max", a.ticks_max}};
  doc["manifest"] = make_manifest("certify", config, inputs, {}, a.seed, argv);
  if (!common.manifest.empty()) write_text(common.manifest, doc["manifest"].dump(2));

  if (common.json()) {
    out << doc.dump(2) << '\n';
  } else {
    print_certificate(out, certificate);
    if (doc.contains("verify")) {
      out << "verify: " << doc["verify"].dump() << '\n';
    }
  }
  if (a.strict && (!certificate.holds() || !verify_ok)) return kExitStrictFailure;
  return kExitOk;
}

void add_common(CLI::App* app, Common& common) {
  app->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  app->add_option("--manifest", common.manifest, "Manifest file (default: next to the first output)");
}

}  // namespace

std::string file_hash(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-agent target assignment and surrogate-gradient path planning", "swarmpath"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SWARMPATH_VERSION);
  Common common;

  TrainArgs ta;
  auto* train_cmd = app.add_subcommand("train", "Fit the surrogate penalty network");
  train_cmd->add_option("--scenario", ta.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--samples", ta.samples, "Number of labeled samples")->check(CLI::PositiveNumber);
  train_cmd->add_option("--hidden", ta.hidden, "Hidden units J")->check(CLI::PositiveNumber);
  train_cmd->add_option("--epochs", ta.epochs, "Maximum epochs")->check(CLI::PositiveNumber);
  train_cmd->add_option("--seed", ta.seed, "Dataset and training seed");
  train_cmd->add_option("--out", ta.out, "Weights file to write")->required();
  train_cmd->add_option("--batch", ta.batch, "Mini-batch size")->check(CLI::PositiveNumber);
  train_cmd->add_option("--patience", ta.patience, "Early-stopping patience (epochs)")->check(CLI::PositiveNumber);
  train_cmd->add_option("--lr", ta.lr, "Learning rate")->check(CLI::PositiveNumber);
  train_cmd->add_option("--lr-decay", ta.lr_decay, "Per-epoch learning-rate factor")->check(CLI::Range(0.0, 1.0));
  train_cmd->add_option("--optimizer", ta.optimizer, "Optimizer")->check(CLI::IsMember({"momentum", "adam"}));
  train_cmd->add_option("--init", ta.init, "Weight initialization")->check(CLI::IsMember({"random", "pairwise"}));
  train_cmd->add_flag("--include-range-term", ta.include_range, "Also learn the range penalty");
  add_common(train_cmd, common);

  SimArgs sa;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the closed loop and write a trace");
  sim_cmd->add_option("--scenario", sa.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  sim_cmd->add_option("--weights", sa.weights, "Weights file")->check(CLI::ExistingFile);
  sim_cmd->add_flag("--zero-net", sa.zero_net, "Use an all-zero network instead of a weights file");
  sim_cmd->add_option("--case", sa.estimation, "1: exact positions, 2: dead-reckoned")->check(CLI::IsMember({1, 2}));
  sim_cmd->add_option("--mode", sa.mode, "Controller")->check(CLI::IsMember({"surrogate", "raw-baseline"}));
  sim_cmd->add_option("--seed", sa.seed, "World seed");
  sim_cmd->add_option("--ticks-max", sa.ticks_max, "Tick limit (0: default)")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--resync", sa.resync, "Case 2 resync period in ticks (0: never)")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--capture-radius", sa.capture_radius, "km (0: v_max * dt)")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--actuation-noise", sa.actuation_noise, "Case 2 heading noise, radians")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--trace", sa.trace, "Trace file (JSON lines)");
  sim_cmd->add_option("--summary", sa.summary, "Summary file (JSON)");
  sim_cmd->add_option("--paths", sa.paths, "Plot-ready positions (CSV)");
  sim_cmd->add_flag("--timing", sa.timing, "Include per-tick compute time in the trace");
  add_common(sim_cmd, common);

  CompareArgs ca;
  auto* cmp_cmd = app.add_subcommand("compare", "Surrogate versus raw-baseline control on static scenarios");
  cmp_cmd->add_option("--scenario", ca.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  cmp_cmd->add_option("--weights", ca.weights, "Weights file")->check(CLI::ExistingFile);
  cmp_cmd->add_flag("--zero-net", ca.zero_net, "Use an all-zero network");
  cmp_cmd->add_option("--seeds", ca.seeds,
                      "Generate this many interposed layouts from the scenario parameters")
      ->check(CLI::NonNegativeNumber);
  cmp_cmd->add_option("--seed", ca.seed, "First seed");
  cmp_cmd->add_option("--ticks-max", ca.ticks_max, "Tick limit (0: default)")->check(CLI::NonNegativeNumber);
  cmp_cmd->add_option("--paths-dir", ca.paths_dir, "Directory for per-mode path CSVs")->check(CLI::ExistingDirectory);
  add_common(cmp_cmd, common);

  CertifyArgs ce;
  auto* cert_cmd = app.add_subcommand("certify", "Finite-time arrival certificate");
  cert_cmd->add_option("--scenario", ce.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  cert_cmd->add_option("--weights", ce.weights, "Weights file")->check(CLI::ExistingFile);
  cert_cmd->add_flag("--zero-net", ce.zero_net, "Use an all-zero network");
  cert_cmd->add_option("--mode", ce.mode, "Controller")->check(CLI::IsMember({"surrogate", "raw-baseline"}));
  cert_cmd->add_flag("--verify", ce.verify, "Simulate and monitor the per-tick decrease");
  cert_cmd->add_option("--seeds", ce.seeds, "Seeds to verify")->check(CLI::PositiveNumber);
  cert_cmd->add_option("--seed", ce.seed, "First seed");
  cert_cmd->add_option("--ticks-max", ce.ticks_max, "Tick limit (0: default)")->check(CLI::NonNegativeNumber);
  cert_cmd->add_flag("--strict", ce.strict, "Exit 1 when a condition or check fails");
  add_common(cert_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SWARMPATH_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests surface here as well.
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*train_cmd) return cmd_train(ta, common, args, out);
    if (*sim_cmd) return cmd_simulate(sa, common, args, out);
    if (*cmp_cmd) return cmd_compare(ca, common, args, out, err);
    if (*cert_cmd) return cmd_certify(ce, common, args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace swarmpath::cli
