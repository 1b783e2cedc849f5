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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "actkit/param_vector.hpp"
#include "actkit/trajectory.hpp"
#include "actkit/types.hpp"

namespace actkit {

struct FitConfig {
  int population_size = 32;
  int max_iterations = 400;
  double initial_sigma = 0.3;  // fraction of the normalized bound width
  std::uint64_t seed = 1;
  std::optional<double> target_loss;  // [rad^2], early stop when reached
  int jobs = 1;                       // parallel rollouts per generation
};

void validate(const FitConfig& cfg);

struct FitResult {
  ParamVector best_params;
  double best_loss = 0.0;            // [rad^2]
  std::vector<double> score_trace;   // running best per iteration
  long evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

/// Per-joint simulation-minus-measurement statistics of the delta phase
/// portrait: mean and RMS of dq, RMS of dqd.
struct PhasePortraitMetrics {
  std::vector<double> mean_dq;  // [rad]
  std::vector<double> rms_dq;   // [rad]
  std::vector<double> rms_dqd;  // [rad/s]
};

/// Time-averaged mean-squared joint-position error
/// (1/k) * sum_k ||q_real - q_sim||^2, summed over joints per step.
double loss(const Trajectory& real, const Trajectory& sim);

/// Rolls out every candidate against `data.targets` and scores it with
/// `loss`. Order is preserved and elements are independent; `jobs` > 1
/// evaluates them on a thread pool without changing results. A failing
/// rollout yields +inf at its index and, when `diagnostics` is non-null,
/// a message at the same index.
std::vector<double> evaluate_population(const RobotModel& base,
                                        std::span<const ParamVector> population,
                                        const Trajectory& data,
                                        const SimConfig& sim, int jobs = 1,
                                        std::vector<std::string>* diagnostics = nullptr);

/// CMA-ES fit of the 4n+1 parameter vector to one or more recorded
/// sequences (multi-sequence loss is the unweighted mean). Coordinates
/// are affinely normalized to [0,1] by their bounds; entries with zero
/// bound width are held fixed at that value. Reproducible from the seed.
FitResult cma_es_fit(const RobotModel& base, std::span<const Trajectory> data,
                     const ParamBounds& bounds, const FitConfig& cfg,
                     const SimConfig& sim);

FitResult cma_es_fit(const RobotModel& base, const Trajectory& data,
                     const ParamBounds& bounds, const FitConfig& cfg,
                     const SimConfig& sim);

/// Delta phase-portrait statistics of aligned trajectories
/// (dq = q_sim - q_real, dqd likewise).
PhasePortraitMetrics delta_phase_metrics(const Trajectory& real, const Trajectory& sim);

}  // namespace actkit
