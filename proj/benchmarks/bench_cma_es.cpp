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

#include "actkit/cma_es.hpp"

namespace {

using namespace actkit;

// optimizer overhead per generation (sampling, eigendecomposition,
// updates) on a trivial objective, across identification-scale dims
void BM_CmaGeneration(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  BatchObjective sphere = [dim](const std::vector<std::vector<double>>& pop) {
    std::vector<double> out(pop.size());
    for (std::size_t e = 0; e < pop.size(); ++e) {
      double s = 0.0;
      for (int i = 0; i < dim; ++i) {
        const double d = pop[e][static_cast<std::size_t>(i)] - 0.4;
        s += d * d;
      }
      out[e] = s;
    }
    return out;
  };
  for (auto _ : state) {
    CmaOptions opts;
    opts.population_size = 32;
    opts.max_iterations = 20;
    opts.seed = 9;
    auto result = cma_es_minimize(dim, sphere, opts);
    benchmark::DoNotOptimize(result.best_value);
  }
  state.SetItemsProcessed(state.iterations() * 20);
}
BENCHMARK(BM_CmaGeneration)->Arg(5)->Arg(49)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
