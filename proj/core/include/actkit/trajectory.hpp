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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace actkit {

/// Uniformly sampled multi-joint time series. Channels are stored
/// row-major: sample k, joint j lives at index k * n_joints + j.
/// `positions`/`velocities`/`torques` may be empty when a file or
/// generator does not provide them; when present they have the same
/// length as `targets`.
struct Trajectory {
  int n_joints = 0;
  std::vector<double> time;       // [s], strictly increasing, uniform
  std::vector<double> targets;    // commanded joint positions [rad]
  std::vector<double> positions;  // measured/simulated positions [rad]
  std::vector<double> velocities; // [rad/s]
  std::vector<double> torques;    // applied joint torques [N m]

  std::size_t samples() const { return time.size(); }
  /// Uniform sampling period; throws InputError on non-uniform time.
  double sample_dt() const;

  double target(std::size_t k, int j) const { return targets[k * n_joints + j]; }
  double position(std::size_t k, int j) const { return positions[k * n_joints + j]; }
  double velocity(std::size_t k, int j) const { return velocities[k * n_joints + j]; }
  double torque(std::size_t k, int j) const { return torques[k * n_joints + j]; }
};

/// Checks shape consistency, finiteness and uniform monotone time.
void validate(const Trajectory& t);

/// CSV layout: header `t,q0..,qd0..,target0..[,tau0..]`, one row per
/// sample. Lines starting with '#' before the header are ignored on read
/// (the CLI uses them to embed the run manifest).
Trajectory read_trajectory_csv(const std::string& path);
Trajectory read_trajectory_csv(std::istream& in, const std::string& name);
void write_trajectory_csv(std::ostream& out, const Trajectory& t,
                          const std::string& comment = "");

}  // namespace actkit
