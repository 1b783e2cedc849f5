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

#include "actkit/excitation.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "actkit/errors.hpp"

namespace actkit {

namespace {

std::vector<double> broadcast(const std::vector<double>& v, int n, const char* what) {
  if (v.size() == 1) return std::vector<double>(static_cast<std::size_t>(n), v[0]);
  if (v.size() != static_cast<std::size_t>(n)) {
    throw InputError(std::string(what) + " needs 1 or n_joints entries");
  }
  return v;
}

}  // namespace

double ChirpSpec::phase(double t) const {
  return 2.0 * std::numbers::pi *
         (f_start * t + (f_end - f_start) * t * t / (2.0 * duration));
}

double ChirpSpec::instantaneous_frequency(double t) const {
  return f_start + (f_end - f_start) * t / duration;
}

void validate(const ChirpSpec& spec) {
  if (!(spec.f_start > 0)) throw InputError("chirp f_start must be > 0");
  if (!(spec.f_end >= spec.f_start)) throw InputError("chirp needs f_start <= f_end");
  if (!(spec.duration > 0)) throw InputError("chirp duration must be > 0");
  if (spec.amplitude.empty()) throw InputError("chirp amplitude missing");
  if (spec.center.empty()) throw InputError("chirp center missing");
  if (spec.sample_rate < 2.0 * spec.f_end) {
    throw InputError("chirp sample_rate below Nyquist of f_end");
  }
}

Trajectory chirp(const ChirpSpec& spec, int n_joints,
                 std::span<const double> phase_offsets) {
  validate(spec);
  if (n_joints <= 0) throw InputError("chirp needs n_joints > 0");
  if (!phase_offsets.empty() &&
      phase_offsets.size() != static_cast<std::size_t>(n_joints)) {
    throw InputError("phase_offsets needs 0 or n_joints entries");
  }
  const auto amp = broadcast(spec.amplitude, n_joints, "chirp amplitude");
  const auto ctr = broadcast(spec.center, n_joints, "chirp center");

  // half-open sampling [0, duration): duration * rate rows
  const double dt = 1.0 / spec.sample_rate;
  const auto samples =
      static_cast<std::size_t>(std::llround(std::floor(spec.duration * spec.sample_rate)));

  Trajectory t;
  t.n_joints = n_joints;
  t.time.resize(samples);
  t.targets.resize(samples * static_cast<std::size_t>(n_joints));
  for (std::size_t k = 0; k < samples; ++k) {
    const double tk = static_cast<double>(k) * dt;
    t.time[k] = tk;
    const double ph = spec.phase(tk);
    for (int j = 0; j < n_joints; ++j) {
      const double off = phase_offsets.empty() ? 0.0 : phase_offsets[static_cast<std::size_t>(j)];
      t.targets[k * static_cast<std::size_t>(n_joints) + static_cast<std::size_t>(j)] =
          ctr[static_cast<std::size_t>(j)] + amp[static_cast<std::size_t>(j)] * std::sin(ph + off);
    }
  }
  return t;
}

void validate(const StepSpec& spec) {
  if (!(spec.dwell > 0)) throw InputError("step dwell must be > 0");
  if (!(spec.duration >= spec.dwell)) throw InputError("step duration must be >= dwell");
  if (spec.amplitude_range < 0) throw InputError("step amplitude_range must be >= 0");
  if (!(spec.sample_rate > 0)) throw InputError("step sample_rate must be > 0");
}

Trajectory random_steps(const StepSpec& spec, int n_joints) {
  validate(spec);
  if (n_joints <= 0) throw InputError("random_steps needs n_joints > 0");

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> uni(-spec.amplitude_range, spec.amplitude_range);

  const double dt = 1.0 / spec.sample_rate;
  const auto samples =
      static_cast<std::size_t>(std::llround(std::floor(spec.duration * spec.sample_rate)));
  const auto n_segments = static_cast<std::size_t>(std::ceil(spec.duration / spec.dwell));

  // draw all segment levels up front; segment s of joint j is level[s*n+j]
  std::vector<double> level(n_segments * static_cast<std::size_t>(n_joints));
  for (auto& x : level) x = spec.center + uni(rng);

  Trajectory t;
  t.n_joints = n_joints;
  t.time.resize(samples);
  t.targets.resize(samples * static_cast<std::size_t>(n_joints));
  for (std::size_t k = 0; k < samples; ++k) {
    const double tk = static_cast<double>(k) * dt;
    t.time[k] = tk;
    auto seg = static_cast<std::size_t>(tk / spec.dwell);
    if (seg >= n_segments) seg = n_segments - 1;
    for (int j = 0; j < n_joints; ++j) {
      t.targets[k * static_cast<std::size_t>(n_joints) + static_cast<std::size_t>(j)] =
          level[seg * static_cast<std::size_t>(n_joints) + static_cast<std::size_t>(j)];
    }
  }
  return t;
}

}  // namespace actkit
