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

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace actkit {

/// Options for the (mu/mu_w, lambda) evolution strategy with covariance
/// matrix adaptation. The search space is the unit box [0,1]^dim;
/// candidates outside are projected onto the box before evaluation and
/// penalized by their squared projection distance.
struct CmaOptions {
  int population_size = 0;      // lambda; 0 picks 4 + floor(3 ln dim)
  int max_iterations = 300;
  double initial_sigma = 0.3;   // in unit-box coordinates
  std::uint64_t seed = 1;
  double target_value = -std::numeric_limits<double>::infinity();
  double sigma_stop = 1e-14;    // declare convergence below this step size
};

/// Evaluates a whole generation at once; element e of the result is the
/// objective at population row e. Rows are projected into the unit box
/// before the call. Implementations may evaluate rows concurrently but
/// must keep the output order.
using BatchObjective =
    std::function<std::vector<double>(const std::vector<std::vector<double>>&)>;

struct CmaResult {
  std::vector<double> best;           // projected, inside the unit box
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> history;        // running best per iteration
  long evaluations = 0;
  int iterations = 0;
  bool converged = false;             // hit target_value or sigma_stop
};

/// Minimizes `objective` over [0,1]^dim. Deterministic for a fixed seed:
/// sampling uses mt19937_64 with an internal Box-Muller transform, and
/// ranking ties break by population index. Throws NumericalError when a
/// full generation evaluates to non-finite values.
CmaResult cma_es_minimize(int dim, const BatchObjective& objective,
                          const CmaOptions& opts,
                          std::span<const double> initial_mean = {});

}  // namespace actkit
