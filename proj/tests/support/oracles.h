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

// Independent reference computations shared by the tests.

#ifndef SWARMPATH_TESTS_ORACLES_H_
#define SWARMPATH_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "swarmpath/geometry.h"
#include "swarmpath/rng.h"
#include "swarmpath/scenario.h"
#include "swarmpath/surrogate.h"

namespace swarmpath::testing {

/// Best total over all n! perfect matchings of a row-major n x n matrix.
inline double brute_force_max(const std::vector<double>& w, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = -1e300;
  do {
    double total = 0.0;
    for (int r = 0; r < n; ++r) total += w[r * n + perm[r]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Central difference of `f` at x along every coordinate.
template <typename F>
std::vector<double> central_difference(F f, std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double keep = x[m];
    x[m] = keep + h;
    const double up = f(x);
    x[m] = keep - h;
    const double down = f(x);
    x[m] = keep;
    g[m] = (up - down) / (2.0 * h);
  }
  return g;
}

/// Random network over a region of the given size with O(1) standardized
/// pre-activations.
inline SurrogateNet random_net(Rng& rng, int n_agents, int n_threats, int hidden,
                               double region_size = 200.0, double label_scale = 1.0) {
  SurrogateNet net = zero_net(n_agents, n_threats, hidden);
  for (auto& w : net.hidden_weights) w = rng.uniform(-1.5, 1.5);
  for (auto& t : net.hidden_bias) t = rng.uniform(-1.0, 1.0);
  for (auto& l : net.output_weights) l = rng.uniform(-2.0, 2.0);
  net.output_bias = rng.uniform(-1.0, 1.0);
  std::fill(net.input_scale.begin(), net.input_scale.end(), 2.0 / region_size);
  std::fill(net.input_offset.begin(), net.input_offset.end(), -1.0);
  net.label_scale = label_scale;
  net.label_offset = rng.uniform(-1.0, 1.0);
  return net;
}

/// Straight scalar re-evaluation of the network, hidden units summed in
/// reverse order.
inline double reference_forward(const SurrogateNet& net, const std::vector<double>& x) {
  double out = 0.0;
  for (int j = net.hidden - 1; j >= 0; --j) {
    double z = net.hidden_bias[j];
    for (int m = net.input_dim - 1; m >= 0; --m) {
      z += net.weight(j, m) * (net.input_scale[m] * x[m] + net.input_offset[m]);
    }
    out += net.output_weights[j] / (1.0 + std::exp(-z));
  }
  return net.label_scale * (out + net.output_bias) + net.label_offset;
}

/// Scenario with explicitly placed entities; agents head along +x at v_max.
inline ScenarioState make_state(const ScenarioParams& params, const std::vector<Vec2>& agents,
                                const std::vector<Vec2>& targets,
                                const std::vector<Vec2>& threats) {
  ScenarioParams p = params;
  p.n_agents = static_cast<int>(agents.size());
  p.n_targets = static_cast<int>(targets.size());
  p.n_radar_missiles = static_cast<int>(threats.size());
  ScenarioState s;
  s.params = p;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    AgentState a;
    a.id = static_cast<int>(i);
    a.position = agents[i];
    a.velocity = {p.v_max, 0.0};
    s.agents.push_back(a);
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    s.targets.push_back({static_cast<int>(i), targets[i], {}, true});
  }
  for (std::size_t i = 0; i < threats.size(); ++i) {
    s.radar_missiles.push_back({static_cast<int>(i), threats[i], {}});
  }
  return s;
}

}  // namespace swarmpath::testing

#endif  // SWARMPATH_TESTS_ORACLES_H_
