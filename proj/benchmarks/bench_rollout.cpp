// Copyright 2026 The actkit Authors
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

#include "actkit/dynamics.hpp"
#include "actkit/excitation.hpp"
#include "actkit/identify.hpp"
#include "support.hpp"

namespace {

using namespace actkit;

void BM_RolloutSeconds(benchmark::State& state) {
  const double duration = static_cast<double>(state.range(0));
  auto model = bench::reference_quadruped();
  SimConfig sim;
  ChirpSpec spec;
  spec.f_start = 0.1;
  spec.f_end = 10.0;
  spec.duration = duration;
  spec.amplitude = {0.3};
  spec.center = {0.0};
  spec.sample_rate = 400.0;
  const auto targets = chirp(spec, model.n_joints);
  std::vector<JointState> init(static_cast<std::size_t>(model.n_joints));
  for (auto _ : state) {
    auto out = rollout(model, targets, sim, init);
    benchmark::DoNotOptimize(out.positions.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(targets.samples()) *
                          model.n_joints * sim.substeps());
}
BENCHMARK(BM_RolloutSeconds)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PopulationEvaluation(benchmark::State& state) {
  const int pop_size = static_cast<int>(state.range(0));
  auto model = bench::reference_quadruped();
  SimConfig sim;
  ChirpSpec spec;
  spec.f_start = 0.1;
  spec.f_end = 10.0;
  spec.duration = 5.0;
  spec.amplitude = {0.3};
  spec.center = {0.0};
  spec.sample_rate = 400.0;
  const auto targets = chirp(spec, model.n_joints);
  std::vector<JointState> init(static_cast<std::size_t>(model.n_joints));
  const auto data = rollout(model, targets, sim, init);

  std::vector<ParamVector> population;
  for (int e = 0; e < pop_size; ++e) {
    auto p = ParamVector::from_model(model);
    p.armature(0) *= 1.0 + 0.01 * e;
    population.push_back(p);
  }
  for (auto _ : state) {
    auto losses = evaluate_population(model, population, data, sim);
    benchmark::DoNotOptimize(losses.data());
  }
  state.SetItemsProcessed(state.iterations() * pop_size);
}
BENCHMARK(BM_PopulationEvaluation)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ChirpGeneration(benchmark::State& state) {
  ChirpSpec spec;
  spec.f_start = 0.1;
  spec.f_end = 10.0;
  spec.duration = 20.0;
  spec.amplitude = {0.3};
  spec.center = {0.0};
  spec.sample_rate = 400.0;
  for (auto _ : state) {
    auto t = chirp(spec, 12);
    benchmark::DoNotOptimize(t.targets.data());
  }
}
BENCHMARK(BM_ChirpGeneration)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
