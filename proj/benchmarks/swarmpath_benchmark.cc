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

#include <vector>

#include <benchmark/benchmark.h>

#include "swarmpath/assignment.h"
#include "swarmpath/controller.h"
#include "swarmpath/rng.h"
#include "swarmpath/scenario.h"
#include "swarmpath/simulator.h"
#include "swarmpath/surrogate.h"

namespace swarmpath {
namespace {

SurrogateNet some_net(int agents, int threats, int hidden) {
  Rng rng(17);
  SurrogateNet net = zero_net(agents, threats, hidden);
  for (auto& w : net.hidden_weights) w = rng.uniform(-1, 1);
  for (auto& l : net.output_weights) l = rng.uniform(-1, 1);
  for (auto& s : net.input_scale) s = 0.01;
  for (auto& o : net.input_offset) o = -1.0;
  return net;
}

void BM_Assignment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  std::vector<Vec2> agents(n), targets(n);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) {
    agents[i] = {rng.uniform(0, 200), rng.uniform(0, 200)};
    targets[i] = {rng.uniform(0, 200), rng.uniform(0, 200)};
    ids[i] = i;
  }
  const auto slots = duplicate_targets(n, ids);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_matching(build_graph(agents, ids, targets, slots, 1.0)));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Assignment)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_Forward(benchmark::State& state) {
  const SurrogateNet net = some_net(10, 4, static_cast<int>(state.range(0)));
  std::vector<double> x(net.input_dim, 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(forward(net, x));
}
BENCHMARK(BM_Forward)->Arg(75)->Arg(300);

void BM_InputGradient(benchmark::State& state) {
  const SurrogateNet net = some_net(10, 4, static_cast<int>(state.range(0)));
  std::vector<double> x(net.input_dim, 50.0), g(net.input_dim), act(net.hidden);
  for (auto _ : state) {
    input_gradient(net, x, g, act);
    benchmark::DoNotOptimize(g.data());
  }
}
BENCHMARK(BM_InputGradient)->Arg(75)->Arg(300);

// One closed-loop tick with ten agents and four threats: reassignment plus
// every agent step.
void BM_ControlTick(benchmark::State& state) {
  const ScenarioState s = random_scenario(ScenarioParams{}, 5);
  const SurrogateNet net = some_net(10, 4, 75);
  const ControllerConfig cfg = resolve({}, s.params);
  const auto positions = s.agent_positions();
  for (auto _ : state) {
    const AssignmentTable table = assign(s, positions);
    for (int id = 0; id < 10; ++id) benchmark::DoNotOptimize(step_agent(s, net, table, id, cfg));
  }
}
BENCHMARK(BM_ControlTick);

void BM_Run200Ticks(benchmark::State& state) {
  const ScenarioState s = random_scenario(ScenarioParams{}, 5);
  const SurrogateNet net = some_net(10, 4, 75);
  SimulationConfig cfg;
  cfg.tick_limit = 200;
  cfg.record_costs = false;
  for (auto _ : state) benchmark::DoNotOptimize(run(s, net, cfg, 1));
}
BENCHMARK(BM_Run200Ticks)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace swarmpath

BENCHMARK_MAIN();
