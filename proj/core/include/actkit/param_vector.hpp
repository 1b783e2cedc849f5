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

#include <vector>

#include "actkit/types.hpp"

namespace actkit {

/// Per-entry box bounds for a parameter vector of dimension 4n+1.
struct ParamBounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
};

/// Flat identification vector of one robot, ordered
/// [I_a(0..n-1), d(0..n-1), tau_f(0..n-1), q_b(0..n-1), T_d].
struct ParamVector {
  int n_joints = 0;
  std::vector<double> values;  // size 4 * n_joints + 1

  static std::size_t dimension(int n_joints) {
    return 4 * static_cast<std::size_t>(n_joints) + 1;
  }

  /// Packs the identified subset of a model into the flat layout.
  static ParamVector from_model(const RobotModel& model);
  /// Unpacks into `model` (joint params and command delay only).
  void apply_to(RobotModel& model) const;

  double& armature(int j) { return values[j]; }
  double& damping(int j) { return values[n_joints + j]; }
  double& friction(int j) { return values[2 * n_joints + j]; }
  double& bias(int j) { return values[3 * n_joints + j]; }
  double& delay() { return values[4 * n_joints]; }
  double armature(int j) const { return values[j]; }
  double damping(int j) const { return values[n_joints + j]; }
  double friction(int j) const { return values[2 * n_joints + j]; }
  double bias(int j) const { return values[3 * n_joints + j]; }
  double delay() const { return values[4 * n_joints]; }
};

void validate(const ParamVector& p);
void validate(const ParamBounds& b, int n_joints);

/// Wide physical defaults: I_a in [1e-6, 10] kg m^2, d in [0, 50],
/// tau_f in [0, 10], bias in [-0.2, 0.2] rad, T_d in [0, 0.05] s.
ParamBounds default_bounds(int n_joints);

/// True when every entry lies inside [lower, upper].
bool within_bounds(const ParamVector& p, const ParamBounds& b);

}  // namespace actkit
