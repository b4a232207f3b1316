// Copyright 2026 The inpd Authors.
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


#include <benchmark/benchmark.h>

#include <vector>

#include "inpd/act.hpp"
#include "inpd/agents.hpp"
#include "inpd/engine.hpp"
#include "inpd/stats.hpp"

namespace inpd {
namespace {

const ImpressionModel& default_model() {
  static const ImpressionModel m = builtin_impression_model("default");
  return m;
}

void BM_OptimalBehavior(benchmark::State& state) {
  Rng rng(1);
  std::vector<Epa> ids;
  for (int i = 0; i < 64; ++i) ids.emplace_back(normal(rng, 0, 2), normal(rng, 0, 2), normal(rng, 0, 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_behavior(ids[i % 64], ids[(i + 7) % 64], default_model(), Epa{}));
    ++i;
  }
}
BENCHMARK(BM_OptimalBehavior);

void BM_UpdateBelief(benchmark::State& state) {
  AgentConfig config = AgentConfig::from_shorthand("BACTD0");
  Rng rng(2);
  auto belief = init_belief(config, rng);
  for (auto _ : state) {
    belief = update_belief(std::move(belief), Epa(2.1, 1.5, 0.8), default_model(), config, rng);
  }
}
BENCHMARK(BM_UpdateBelief);

void BM_SimulationRound(benchmark::State& state, const char* setting) {
  RunSpec spec;
  spec.identity = {0, 0, 0, 0, setting, "Grid", "M1", 3};
  spec.agent = AgentConfig::from_shorthand(setting);
  spec.network = NetworkSpec::grid8_torus(13, 13);
  spec.rounds = 1 << 20;
  Simulation sim(spec, default_model());
  for (auto _ : state) sim.step();
}
BENCHMARK_CAPTURE(BM_SimulationRound, BACTD0, "BACTD0")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SimulationRound, IM50, "IM50")->Unit(benchmark::kMicrosecond);

void BM_GTest(benchmark::State& state) {
  const Contingency t({1109, 1117, 1131}, {2271, 2263, 2249});
  for (auto _ : state) benchmark::DoNotOptimize(g_test(t));
}
BENCHMARK(BM_GTest);

}  // namespace
}  // namespace inpd

BENCHMARK_MAIN();
