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

#include "swarmpath/surrogate.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "json.hpp"
#include "swarmpath/cost.h"
#include "swarmpath/rng.h"

namespace swarmpath {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

SurrogateNet zero_net(int n_agents, int n_threats, int hidden) {
  SurrogateNet net;
  net.n_agents = n_agents;
  net.n_threats = n_threats;
  net.input_dim = 2 * n_agents + 2 * n_threats;
  net.hidden = hidden;
  net.hidden_weights.assign(static_cast<std::size_t>(hidden) * net.input_dim, 0.0);
  net.hidden_bias.assign(hidden, 0.0);
  net.output_weights.assign(hidden, 0.0);
  net.input_scale.assign(net.input_dim, 1.0);
  net.input_offset.assign(net.input_dim, 0.0);
  return net;
}

void validate(const SurrogateNet& net) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ValidationError(std::string("surrogate: ") + what + " violated");
  };
  require(net.n_agents >= 0 && net.n_threats >= 0, "non-negative layout");
  require(net.input_dim == 2 * net.n_agents + 2 * net.n_threats, "input_dim = 2N + 2M");
  require(net.hidden > 0, "J > 0");
  require(net.hidden_weights.size() == static_cast<std::size_t>(net.hidden) * net.input_dim,
          "weight matrix size");
  require(net.hidden_bias.size() == static_cast<std::size_t>(net.hidden), "bias size");
  require(net.output_weights.size() == static_cast<std::size_t>(net.hidden),
          "output weight size");
  require(net.input_scale.size() == static_cast<std::size_t>(net.input_dim) &&
              net.input_offset.size() == static_cast<std::size_t>(net.input_dim),
          "standardization size");
  auto all_finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  require(all_finite(net.hidden_weights) && all_finite(net.hidden_bias) &&
              all_finite(net.output_weights) && all_finite(net.input_scale) &&
              all_finite(net.input_offset) && std::isfinite(net.output_bias) &&
              std::isfinite(net.label_scale) && std::isfinite(net.label_offset),
          "finite parameters");
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

void check_dim(const SurrogateNet& net, std::size_t size) {
  if (size != static_cast<std::size_t>(net.input_dim)) {
    throw std::invalid_argument("surrogate: input has " + std::to_string(size) +
                                " coordinates, network expects " +
                                std::to_string(net.input_dim));
  }
}

double pre_activation(const SurrogateNet& net, int unit, std::span<const double> x) {
  const double* w = net.hidden_weights.data() + static_cast<std::size_t>(unit) * net.input_dim;
  double z = net.hidden_bias[unit];
  for (int m = 0; m < net.input_dim; ++m) {
    z += w[m] * (net.input_scale[m] * x[m] + net.input_offset[m]);
  }
  return z;
}

}  // namespace

double forward(const SurrogateNet& net, std::span<const double> x) {
  check_dim(net, x.size());
  double out = net.output_bias;
  for (int j = 0; j < net.hidden; ++j) {
    out += net.output_weights[j] * sigmoid(pre_activation(net, j, x));
  }
  return net.label_scale * out + net.label_offset;
}

void input_gradient(const SurrogateNet& net, std::span<const double> x, std::span<double> out,
                    std::span<double> activation) {
  check_dim(net, x.size());
  check_dim(net, out.size());
  std::fill(out.begin(), out.end(), 0.0);
  for (int j = 0; j < net.hidden; ++j) {
    const double s = sigmoid(pre_activation(net, j, x));
    // sigma' = sigma (1 - sigma) = e^{-z} / (1 + e^{-z})^2
    activation[j] = net.output_weights[j] * s * (1.0 - s);
  }
  for (int j = 0; j < net.hidden; ++j) {
    const double a = activation[j];
    if (a == 0.0) continue;
    const double* w = net.hidden_weights.data() + static_cast<std::size_t>(j) * net.input_dim;
    for (int m = 0; m < net.input_dim; ++m) out[m] += a * w[m];
  }
  for (int m = 0; m < net.input_dim; ++m) out[m] *= net.label_scale * net.input_scale[m];
}

std::vector<double> input_gradient(const SurrogateNet& net, std::span<const double> x) {
  std::vector<double> out(net.input_dim);
  std::vector<double> scratch(net.hidden);
  input_gradient(net, x, out, scratch);
  return out;
}

std::vector<double> zero_pad(std::span<const double> x, std::span<const int> lost_agent_ids,
                             int input_dim) {
  std::vector<double> out(input_dim, 0.0);
  std::copy_n(x.begin(), std::min<std::size_t>(x.size(), input_dim), out.begin());
  for (int id : lost_agent_ids) {
    if (id < 0 || 2 * id + 1 >= input_dim) {
      throw std::out_of_range("zero_pad: agent id out of range");
    }
    out[2 * id] = 0.0;
    out[2 * id + 1] = 0.0;
  }
  return out;
}

std::vector<double> pack_input(std::span<const Vec2> agents, std::span<const char> agent_active,
                               std::span<const Vec2> threats) {
  std::vector<double> x;
  x.reserve(2 * (agents.size() + threats.size()));
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const bool active = agent_active.empty() || agent_active[i];
    x.push_back(active ? agents[i].x : 0.0);
    x.push_back(active ? agents[i].y : 0.0);
  }
  for (const auto& o : threats) {
    x.push_back(o.x);
    x.push_back(o.y);
  }
  return x;
}

double weight_bound(const SurrogateNet& net) {
  double bound = 0.0;
  for (int m = 0; m < 2 * net.n_agents && m < net.input_dim; ++m) {
    double sum = 0.0;
    for (int j = 0; j < net.hidden; ++j) sum += std::abs(net.output_weights[j] * net.weight(j, m));
    bound = std::max(bound, 0.25 * std::abs(net.label_scale * net.input_scale[m]) * sum);
  }
  return bound;
}

Dataset generate_dataset(const ScenarioParams& params, std::size_t n_samples,
                         std::uint64_t seed, const DatasetOptions& options) {
  validate(params);
  Dataset d;
  d.n_agents = params.n_agents;
  d.n_threats = params.n_radar_missiles;
  d.input_dim = 2 * d.n_agents + 2 * d.n_threats;
  d.seed = seed;
  const double size = params.region_size();
  d.input_scale.assign(d.input_dim, 2.0 / size);
  d.input_offset.assign(d.input_dim, -1.0);
  d.inputs.resize(n_samples * d.input_dim);
  d.labels.resize(n_samples);

  Rng rng = Rng(seed).fork(0xda7a5e7);
  std::vector<Vec2> agents(d.n_agents), threats(d.n_threats);
  for (std::size_t s = 0; s < n_samples; ++s) {
    double* row = d.inputs.data() + s * d.input_dim;
    for (int i = 0; i < d.n_agents; ++i) {
      agents[i] = {rng.uniform(0.0, size), rng.uniform(0.0, size)};
      row[2 * i] = agents[i].x;
      row[2 * i + 1] = agents[i].y;
    }
    for (int j = 0; j < d.n_threats; ++j) {
      threats[j] = {rng.uniform(0.0, size), rng.uniform(0.0, size)};
      row[2 * d.n_agents + 2 * j] = threats[j].x;
      row[2 * d.n_agents + 2 * j + 1] = threats[j].y;
    }
    double label = smoothed_interaction_penalty(agents, threats, params);
    if (options.include_range_term) {
      for (int i = 0; i < d.n_agents; ++i) {
        const double path = rng.uniform(0.0, 1.2 * params.max_range);
        const Vec2 target{rng.uniform(0.0, size), rng.uniform(0.0, size)};
        label += smoothed_range_penalty(path, distance(agents[i], target), params);
      }
    }
    d.labels[s] = label;
  }
  return d;
}

std::string dataset_hash(const Dataset& dataset) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  feed(&dataset.input_dim, sizeof(dataset.input_dim));
  feed(dataset.inputs.data(), dataset.inputs.size() * sizeof(double));
  feed(dataset.labels.data(), dataset.labels.size() * sizeof(double));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Parameters {
  RowMatrix w;             // hidden x input_dim
  Eigen::VectorXd theta;   // hidden
  Eigen::VectorXd lambda;  // hidden
  double mu = 0.0;
};

struct Gradients {
  RowMatrix w;
  Eigen::VectorXd theta;
  Eigen::VectorXd lambda;
  double mu = 0.0;
};

Eigen::MatrixXd activations(const Parameters& p, const RowMatrix& x) {
  Eigen::MatrixXd z = x * p.w.transpose();
  z.rowwise() += p.theta.transpose();
  return z.unaryExpr([](double v) { return sigmoid(v); });
}

Eigen::VectorXd predict(const Parameters& p, const RowMatrix& x) {
  Eigen::VectorXd out = activations(p, x) * p.lambda;
  out.array() += p.mu;
  return out;
}

double mse(const Parameters& p, const RowMatrix& x, const Eigen::VectorXd& y) {
  if (y.size() == 0) return 0.0;
  return (predict(p, x) - y).squaredNorm() / static_cast<double>(y.size());
}

void batch_gradient(const Parameters& p, const RowMatrix& x, const Eigen::VectorXd& y,
                    Gradients& g) {
  const Eigen::MatrixXd a = activations(p, x);
  Eigen::VectorXd err = a * p.lambda;
  err.array() += p.mu - y.array();
  const Eigen::VectorXd dout = err * (2.0 / static_cast<double>(y.size()));
  g.lambda = a.transpose() * dout;
  g.mu = dout.sum();
  Eigen::MatrixXd dz = dout * p.lambda.transpose();
  dz.array() *= a.array() * (1.0 - a.array());
  g.w = dz.transpose() * x;
  g.theta = dz.colwise().sum().transpose();
}

void initialize(Parameters& p, const Dataset& d, const TrainerConfig& cfg, double label_mean,
                Rng& rng) {
  const int n = d.input_dim;
  const int hidden = cfg.hidden;
  p.w = RowMatrix::Zero(hidden, n);
  p.theta = Eigen::VectorXd::Zero(hidden);
  p.lambda = Eigen::VectorXd::Zero(hidden);
  p.mu = label_mean;
  for (int j = 0; j < hidden; ++j) p.lambda[j] = rng.normal() * 0.1 / std::sqrt(hidden);

  const bool pairwise = cfg.init == InitScheme::kPairwise && n > 2;
  if (!pairwise) {
    const double spread = std::sqrt(6.0 / (n + 1.0));
    for (int j = 0; j < hidden; ++j) {
      for (int m = 0; m < n; ++m) p.w(j, m) = rng.uniform(-spread, spread);
      p.theta[j] = rng.uniform(-1.0, 1.0);
    }
    return;
  }
  // Ramps across the relative position of a random agent-threat pair (or an
  // agent pair when there are no threats). In standardized coordinates a
  // raw difference of D km is D * input_scale, so unit slopes are set per km.
  const int agents = d.n_agents;
  const int threats = d.n_threats;
  const double km_per_unit = 1.0 / d.input_scale[0];
  for (int j = 0; j < hidden; ++j) {
    const int i = static_cast<int>(rng.below(agents));
    int other = 0;
    if (threats > 0) {
      other = 2 * agents + 2 * static_cast<int>(rng.below(threats));
    } else {
      int k = static_cast<int>(rng.below(agents - 1));
      if (k >= i) ++k;
      other = 2 * k;
    }
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    // Ramp width of a few km, centred within +-15 km of the pair offset 0.
    const double per_km = rng.uniform(0.2, 0.8);
    const double slope = per_km * km_per_unit;
    p.w(j, 2 * i) = slope * std::cos(angle);
    p.w(j, 2 * i + 1) = slope * std::sin(angle);
    p.w(j, other) = -slope * std::cos(angle);
    p.w(j, other + 1) = -slope * std::sin(angle);
    p.theta[j] = -per_km * rng.uniform(-15.0, 15.0);
  }
}

}  // namespace

std::pair<SurrogateNet, TrainingReport> train(const Dataset& d, const TrainerConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  if (cfg.hidden <= 0) throw std::invalid_argument("train: hidden must be positive");
  if (cfg.train_fraction <= 0 || cfg.validation_fraction < 0 ||
      cfg.train_fraction + cfg.validation_fraction > 1.0) {
    throw std::invalid_argument("train: invalid split fractions");
  }
  const std::size_t total = d.size();
  const auto n_train = static_cast<std::size_t>(std::floor(cfg.train_fraction * total + 0.5));
  const auto n_val = static_cast<std::size_t>(std::floor(cfg.validation_fraction * total + 0.5));
  if (n_train == 0) throw std::invalid_argument("train: empty training split");
  const std::size_t n_test = total - std::min(total, n_train + n_val);

  Rng rng = Rng(cfg.seed).fork(0x7a1e);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = total; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  const int n = d.input_dim;
  auto gather = [&](std::size_t begin, std::size_t count, RowMatrix& x, Eigen::VectorXd& y) {
    x.resize(static_cast<Eigen::Index>(count), n);
    y.resize(static_cast<Eigen::Index>(count));
    for (std::size_t r = 0; r < count; ++r) {
      const auto src = d.input(order[begin + r]);
      for (int m = 0; m < n; ++m) x(r, m) = d.input_scale[m] * src[m] + d.input_offset[m];
      y[r] = d.labels[order[begin + r]];
    }
  };
  RowMatrix x_train, x_val, x_test;
  Eigen::VectorXd y_train, y_val, y_test;
  gather(0, n_train, x_train, y_train);
  gather(n_train, n_val, x_val, y_val);
  gather(n_train + n_val, n_test, x_test, y_test);

  // Labels mapped to [-1, 1] using the training split's range.
  const double lo = y_train.minCoeff();
  const double hi = y_train.maxCoeff();
  const double label_scale = hi > lo ? 0.5 * (hi - lo) : 1.0;
  const double label_offset = hi > lo ? 0.5 * (hi + lo) : lo;
  auto normalize = [&](Eigen::VectorXd& y) { y = (y.array() - label_offset) / label_scale; };
  normalize(y_train);
  normalize(y_val);
  normalize(y_test);
  const double label_mean = y_train.mean();

  Parameters p;
  initialize(p, d, cfg, label_mean, rng);
  Parameters best = p;

  Gradients g, velocity, second;
  velocity.w = RowMatrix::Zero(cfg.hidden, n);
  velocity.theta = Eigen::VectorXd::Zero(cfg.hidden);
  velocity.lambda = Eigen::VectorXd::Zero(cfg.hidden);
  second = velocity;
  double adam_b1t = 1.0, adam_b2t = 1.0;
  constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kAdamEps = 1e-8;

  const RowMatrix& x_monitor = n_val > 0 ? x_val : x_train;
  const Eigen::VectorXd& y_monitor = n_val > 0 ? y_val : y_train;
  double best_val = mse(p, x_monitor, y_monitor);
  int best_epoch = 0;
  int stale = 0;
  int epochs = 0;
  double lr = cfg.learning_rate;

  std::vector<std::size_t> batch_order(n_train);
  std::iota(batch_order.begin(), batch_order.end(), std::size_t{0});
  const std::size_t batch = static_cast<std::size_t>(std::max(1, cfg.batch_size));
  RowMatrix xb;
  Eigen::VectorXd yb;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    for (std::size_t i = n_train; i > 1; --i) {
      std::swap(batch_order[i - 1], batch_order[rng.below(i)]);
    }
    for (std::size_t start = 0; start < n_train; start += batch) {
      const std::size_t count = std::min(batch, n_train - start);
      xb.resize(static_cast<Eigen::Index>(count), n);
      yb.resize(static_cast<Eigen::Index>(count));
      for (std::size_t r = 0; r < count; ++r) {
        xb.row(r) = x_train.row(batch_order[start + r]);
        yb[r] = y_train[batch_order[start + r]];
      }
      batch_gradient(p, xb, yb, g);
      if (cfg.optimizer == Optimizer::kMomentum) {
        velocity.w = cfg.momentum * velocity.w - lr * g.w;
        velocity.theta = cfg.momentum * velocity.theta - lr * g.theta;
        velocity.lambda = cfg.momentum * velocity.lambda - lr * g.lambda;
        velocity.mu = cfg.momentum * velocity.mu - lr * g.mu;
        p.w += velocity.w;
        p.theta += velocity.theta;
        p.lambda += velocity.lambda;
        p.mu += velocity.mu;
      } else {
        adam_b1t *= kBeta1;
        adam_b2t *= kBeta2;
        const double step = lr * std::sqrt(1.0 - adam_b2t) / (1.0 - adam_b1t);
        auto update = [&](auto& param, auto& m1, auto& m2, const auto& grad) {
          m1 = kBeta1 * m1 + (1.0 - kBeta1) * grad;
          m2 = kBeta2 * m2 + (1.0 - kBeta2) * grad.cwiseProduct(grad);
          param.array() -= step * m1.array() / (m2.array().sqrt() + kAdamEps);
        };
        update(p.w, velocity.w, second.w, g.w);
        update(p.theta, velocity.theta, second.theta, g.theta);
        update(p.lambda, velocity.lambda, second.lambda, g.lambda);
        velocity.mu = kBeta1 * velocity.mu + (1.0 - kBeta1) * g.mu;
        second.mu = kBeta2 * second.mu + (1.0 - kBeta2) * g.mu * g.mu;
        p.mu -= step * velocity.mu / (std::sqrt(second.mu) + kAdamEps);
      }
    }
    epochs = epoch;
    lr *= cfg.learning_rate_decay;

    const double val = mse(p, x_monitor, y_monitor);
    if (!std::isfinite(val)) break;
    if (val < best_val) {
      best_val = val;
      best = p;
      best_epoch = epoch;
      stale = 0;
    } else if (++stale >= cfg.patience) {
      break;
    }
  }

  SurrogateNet net;
  net.n_agents = d.n_agents;
  net.n_threats = d.n_threats;
  net.input_dim = n;
  net.hidden = cfg.hidden;
  net.hidden_weights.assign(best.w.data(), best.w.data() + best.w.size());
  net.hidden_bias.assign(best.theta.data(), best.theta.data() + best.theta.size());
  net.output_weights.assign(best.lambda.data(), best.lambda.data() + best.lambda.size());
  net.output_bias = best.mu;
  net.input_scale = d.input_scale;
  net.input_offset = d.input_offset;
  net.label_scale = label_scale;
  net.label_offset = label_offset;
  net.training_seed = cfg.seed;
  net.dataset_hash = dataset_hash(d);

  TrainingReport report;
  report.train_mse = mse(best, x_train, y_train);
  report.validation_mse = mse(best, x_val, y_val);
  report.test_mse = mse(best, x_test, y_test);
  report.baseline_test_mse =
      n_test > 0 ? (y_test.array() - label_mean).square().sum() / static_cast<double>(n_test)
                 : 0.0;
  report.epochs = epochs;
  report.best_epoch = best_epoch;
  report.dataset_size = total;
  report.train_fraction = static_cast<double>(n_train) / static_cast<double>(total);
  report.validation_fraction = static_cast<double>(n_val) / static_cast<double>(total);
  report.test_fraction = static_cast<double>(n_test) / static_cast<double>(total);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return {std::move(net), report};
}

namespace {

using nlohmann::json;

json report_to_json(const TrainingReport& r) {
  return {{"train_mse", r.train_mse},
          {"validation_mse", r.validation_mse},
          {"test_mse", r.test_mse},
          {"baseline_test_mse", r.baseline_test_mse},
          {"epochs", r.epochs},
          {"best_epoch", r.best_epoch},
          {"dataset_size", r.dataset_size},
          {"train_fraction", r.train_fraction},
          {"validation_fraction", r.validation_fraction},
          {"test_fraction", r.test_fraction},
          {"seconds", r.seconds}};
}

TrainingReport report_from_json(const json& j) {
  TrainingReport r;
  r.train_mse = j.at("train_mse").get<double>();
  r.validation_mse = j.at("validation_mse").get<double>();
  r.test_mse = j.at("test_mse").get<double>();
  r.baseline_test_mse = j.value("baseline_test_mse", 0.0);
  r.epochs = j.at("epochs").get<int>();
  r.best_epoch = j.value("best_epoch", 0);
  r.dataset_size = j.at("dataset_size").get<std::size_t>();
  r.train_fraction = j.at("train_fraction").get<double>();
  r.validation_fraction = j.at("validation_fraction").get<double>();
  r.test_fraction = j.at("test_fraction").get<double>();
  r.seconds = j.value("seconds", 0.0);
  return r;
}

}  // namespace

std::string weights_to_json(const WeightsFile& file) {
  const auto& net = file.net;
  json j = {{"format", "swarmpath-surrogate"},
            {"version", kWeightsFormatVersion},
            {"n_agents", net.n_agents},
            {"n_threats", net.n_threats},
            {"input_dim", net.input_dim},
            {"hidden", net.hidden},
            {"input_scale", net.input_scale},
            {"input_offset", net.input_offset},
            {"label_scale", net.label_scale},
            {"label_offset", net.label_offset},
            {"hidden_weights", net.hidden_weights},
            {"hidden_bias", net.hidden_bias},
            {"output_weights", net.output_weights},
            {"output_bias", net.output_bias},
            {"training_seed", net.training_seed},
            {"dataset_hash", net.dataset_hash}};
  if (file.has_report) j["report"] = report_to_json(file.report);
  if (!file.manifest.empty()) j["manifest"] = json::parse(file.manifest);
  return j.dump(1);
}

WeightsFile weights_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed weights file: ") + e.what());
  }
  WeightsFile file;
  try {
    if (j.at("format").get<std::string>() != "swarmpath-surrogate") {
      throw ParseError("not a swarmpath weights file");
    }
    const int version = j.at("version").get<int>();
    if (version != kWeightsFormatVersion) {
      throw ParseError("unsupported weights file version " + std::to_string(version));
    }
    auto& net = file.net;
    net.n_agents = j.at("n_agents").get<int>();
    net.n_threats = j.at("n_threats").get<int>();
    net.input_dim = j.at("input_dim").get<int>();
    net.hidden = j.at("hidden").get<int>();
    net.input_scale = j.at("input_scale").get<std::vector<double>>();
    net.input_offset = j.at("input_offset").get<std::vector<double>>();
    net.label_scale = j.at("label_scale").get<double>();
    net.label_offset = j.at("label_offset").get<double>();
    net.hidden_weights = j.at("hidden_weights").get<std::vector<double>>();
    net.hidden_bias = j.at("hidden_bias").get<std::vector<double>>();
    net.output_weights = j.at("output_weights").get<std::vector<double>>();
    net.output_bias = j.at("output_bias").get<double>();
    net.training_seed = j.value("training_seed", std::uint64_t{0});
    net.dataset_hash = j.value("dataset_hash", std::string{});
    if (j.contains("report")) {
      file.report = report_from_json(j.at("report"));
      file.has_report = true;
    }
    if (j.contains("manifest")) file.manifest = j.at("manifest").dump();
  } catch (const json::exception& e) {
    throw ParseError(std::string("weights file: ") + e.what());
  }
  validate(file.net);
  return file;
}

void save_weights(const WeightsFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write weights file " + path.string());
  out << weights_to_json(file) << '\n';
}

WeightsFile load_weights(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weights file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return weights_from_json(buffer.str());
}

}  // namespace swarmpath
