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

#ifndef SWARMPATH_SURROGATE_H_
#define SWARMPATH_SURROGATE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swarmpath/scenario.h"

namespace swarmpath {

/// Smooth stand-in F* for the penalty part of the objective: a single hidden
/// layer of sigmoid units with a linear output,
///
///   F*(X) = label_scale * (mu + sum_j lambda_j * sigma(w_j . s(X) + theta_j))
///           + label_offset,
///
/// where s(X) is the per-coordinate input standardization. The input vector
/// is (x_1, y_1, ..., x_N, y_N, ox_1, oy_1, ..., ox_M, oy_M) in km.
struct SurrogateNet {
  int n_agents = 0;
  int n_threats = 0;
  int input_dim = 0;
  int hidden = 0;
  /// hidden x input_dim, row-major: the weight vector of unit j is row j.
  std::vector<double> hidden_weights;
  std::vector<double> hidden_bias;
  std::vector<double> output_weights;
  double output_bias = 0.0;
  /// Standardized input m is input_scale[m] * x_m + input_offset[m].
  std::vector<double> input_scale;
  std::vector<double> input_offset;
  double label_scale = 1.0;
  double label_offset = 0.0;
  std::uint64_t training_seed = 0;
  std::string dataset_hash;

  double weight(int unit, int input) const {
    return hidden_weights[static_cast<std::size_t>(unit) * input_dim + input];
  }
};

/// All-zero parameters with identity standardization; F* == 0 everywhere.
SurrogateNet zero_net(int n_agents, int n_threats, int hidden = 1);

/// Throws ValidationError if sizes are inconsistent or any parameter is not
/// finite.
void validate(const SurrogateNet& net);

double sigmoid(double z);

/// F*(X). Throws std::invalid_argument on a dimension mismatch.
double forward(const SurrogateNet& net, std::span<const double> x);

/// dF*/dX for every input coordinate.
std::vector<double> input_gradient(const SurrogateNet& net, std::span<const double> x);

/// Allocation-free variant; `activation` needs `hidden` entries of scratch.
void input_gradient(const SurrogateNet& net, std::span<const double> x, std::span<double> out,
                    std::span<double> activation);

/// Replaces the coordinates of the listed agents (0-based ids) with zero;
/// the result has the network's input length.
std::vector<double> zero_pad(std::span<const double> x, std::span<const int> lost_agent_ids,
                             int input_dim);

/// Packs agent and threat positions into a network input vector, padding
/// agents flagged inactive with zeros.
std::vector<double> pack_input(std::span<const Vec2> agents, std::span<const char> agent_active,
                               std::span<const Vec2> threats);

/// max over agent coordinates m of 1/4 * sum_j |lambda_j w_jm|, in raw input
/// units. Bounds |dF*/dx_i| and |dF*/dy_i| for every input.
double weight_bound(const SurrogateNet& net);

/// Labeled samples for fitting the network.
struct Dataset {
  int n_agents = 0;
  int n_threats = 0;
  int input_dim = 0;
  /// Row-major, one raw input vector (km) per sample.
  std::vector<double> inputs;
  std::vector<double> labels;
  /// Affine map of raw inputs to [-1, 1].
  std::vector<double> input_scale;
  std::vector<double> input_offset;
  std::uint64_t seed = 0;

  std::size_t size() const { return labels.size(); }
  std::span<const double> input(std::size_t i) const {
    return {inputs.data() + i * static_cast<std::size_t>(input_dim),
            static_cast<std::size_t>(input_dim)};
  }
};

struct DatasetOptions {
  /// Also label with a smoothed range term built from a synthetic path
  /// length drawn in [0, 1.2 * L_bar] and a random target per agent. Off by
  /// default because the controller adds that term analytically.
  bool include_range_term = false;
};

/// Samples agent and threat positions uniformly over the region and labels
/// each sample with the smoothed penalty. Deterministic per seed.
Dataset generate_dataset(const ScenarioParams& params, std::size_t n_samples,
                         std::uint64_t seed, const DatasetOptions& options = {});

/// FNV-1a over the raw sample bytes, as 16 hex digits.
std::string dataset_hash(const Dataset& dataset);

enum class Optimizer { kMomentum, kAdam };
enum class InitScheme {
  /// Small random weights on every input.
  kRandom,
  /// Each unit starts as a ramp across the relative position of one
  /// agent-threat pair.
  kPairwise,
};

struct TrainerConfig {
  int hidden = 75;
  int max_epochs = 1000;
  std::uint64_t seed = 1;
  Optimizer optimizer = Optimizer::kMomentum;
  InitScheme init = InitScheme::kRandom;
  int batch_size = 256;
  double learning_rate = 1e-2;
  /// Multiplicative learning-rate decay per epoch.
  double learning_rate_decay = 0.997;
  double momentum = 0.9;
  /// Stop after this many validation checks without improvement.
  int patience = 20;
  double train_fraction = 0.70;
  double validation_fraction = 0.15;
};

/// MSEs are measured on labels mapped to [-1, 1] with the training split's
/// label range.
struct TrainingReport {
  double train_mse = 0.0;
  double validation_mse = 0.0;
  double test_mse = 0.0;
  /// Test MSE of always predicting the mean training label.
  double baseline_test_mse = 0.0;
  int epochs = 0;
  int best_epoch = 0;
  std::size_t dataset_size = 0;
  double train_fraction = 0.0;
  double validation_fraction = 0.0;
  double test_fraction = 0.0;
  double seconds = 0.0;
};

/// Fits a network by mini-batch backpropagation on MSE with early stopping
/// on the validation split; returns the best-validation parameters. Throws
/// std::invalid_argument when the training split is empty.
std::pair<SurrogateNet, TrainingReport> train(const Dataset& dataset,
                                              const TrainerConfig& config);

/// Weights file (JSON text). Parameters are written with round-trip
/// precision, so reading back reproduces forward outputs bit for bit.
struct WeightsFile {
  SurrogateNet net;
  TrainingReport report;
  bool has_report = false;
  /// Provenance record as a JSON object text; empty for none.
  std::string manifest;
};

inline constexpr int kWeightsFormatVersion = 1;

std::string weights_to_json(const WeightsFile& file);
WeightsFile weights_from_json(const std::string& text);
void save_weights(const WeightsFile& file, const std::filesystem::path& path);
WeightsFile load_weights(const std::filesystem::path& path);

}  // namespace swarmpath

#endif  // SWARMPATH_SURROGATE_H_
