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
#include <span>
#include <vector>

#include "actkit/trajectory.hpp"

namespace actkit {

/// Linear swept-sine specification. Amplitude and center are per joint;
/// a scalar entry broadcasts to all joints.
struct ChirpSpec {
  double f_start = 0.1;    // [Hz]
  double f_end = 10.0;     // [Hz]
  double duration = 20.0;  // [s]
  std::vector<double> amplitude;  // [rad], per joint (or single entry)
  std::vector<double> center;     // [rad], per joint (or single entry)
  double sample_rate = 400.0;     // [Hz]

  /// Phase of the linear sweep: 2*pi*(f0*t + (f1-f0)*t^2/(2*T)).
  double phase(double t) const;
  /// d(phase)/dt / (2*pi): f0 at t=0, f1 at t=duration.
  double instantaneous_frequency(double t) const;
};

void validate(const ChirpSpec& spec);

/// Random piecewise-constant joint steps: a fresh uniform sample from
/// center +- amplitude_range every `dwell` seconds.
struct StepSpec {
  double dwell = 0.5;           // [s]
  double amplitude_range = 0.0; // [rad]
  double center = 0.0;          // [rad]
  double duration = 10.0;       // [s]
  double sample_rate = 400.0;   // [Hz]
  std::uint64_t seed = 0;
};

void validate(const StepSpec& spec);

/// Generates target(t) = center + amplitude * sin(phase(t) + offset) per
/// joint. `phase_offsets` may be empty (all zero) or hold one entry per
/// joint; symmetric robots use offsets to cancel net base wrench.
Trajectory chirp(const ChirpSpec& spec, int n_joints,
                 std::span<const double> phase_offsets = {});

Trajectory random_steps(const StepSpec& spec, int n_joints);

}  // namespace actkit
