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

#include "actkit/param_vector.hpp"

#include <cmath>

#include "actkit/errors.hpp"

namespace actkit {

ParamVector ParamVector::from_model(const RobotModel& model) {
  ParamVector p;
  p.n_joints = model.n_joints;
  p.values.resize(dimension(model.n_joints));
  for (int j = 0; j < model.n_joints; ++j) {
    const auto& jp = model.joints[static_cast<std::size_t>(j)];
    p.armature(j) = jp.armature_inertia;
    p.damping(j) = jp.viscous_damping;
    p.friction(j) = jp.coulomb_friction;
    p.bias(j) = jp.joint_bias;
  }
  p.delay() = model.command_delay;
  return p;
}

void ParamVector::apply_to(RobotModel& model) const {
  if (model.n_joints != n_joints) {
    throw InputError("parameter vector is for " + std::to_string(n_joints) +
                     " joints, model has " + std::to_string(model.n_joints));
  }
  for (int j = 0; j < n_joints; ++j) {
    auto& jp = model.joints[static_cast<std::size_t>(j)];
    jp.armature_inertia = armature(j);
    jp.viscous_damping = damping(j);
    jp.coulomb_friction = friction(j);
    jp.joint_bias = bias(j);
  }
  model.command_delay = delay();
}

void validate(const ParamVector& p) {
  if (p.n_joints <= 0) throw InputError("parameter vector needs n_joints > 0");
  if (p.values.size() != ParamVector::dimension(p.n_joints)) {
    throw InputError("parameter vector has " + std::to_string(p.values.size()) +
                     " entries, expected " +
                     std::to_string(ParamVector::dimension(p.n_joints)));
  }
  for (double v : p.values) {
    if (!std::isfinite(v)) throw InputError("non-finite parameter value");
  }
}

void validate(const ParamBounds& b, int n_joints) {
  const std::size_t dim = ParamVector::dimension(n_joints);
  if (b.lower.size() != dim || b.upper.size() != dim) {
    throw InputError("bounds need " + std::to_string(dim) + " entries per side");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!std::isfinite(b.lower[i]) || !std::isfinite(b.upper[i])) {
      throw InputError("bounds must be finite");
    }
    if (b.lower[i] > b.upper[i]) {
      throw InputError("lower bound above upper bound at entry " + std::to_string(i));
    }
  }
}

ParamBounds default_bounds(int n_joints) {
  const auto n = static_cast<std::size_t>(n_joints);
  ParamBounds b;
  b.lower.resize(4 * n + 1);
  b.upper.resize(4 * n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    b.lower[j] = 1e-6;
    b.upper[j] = 10.0;  // armature inertia [kg m^2]
    b.lower[n + j] = 0.0;
    b.upper[n + j] = 50.0;  // viscous damping
    b.lower[2 * n + j] = 0.0;
    b.upper[2 * n + j] = 10.0;  // Coulomb friction
    b.lower[3 * n + j] = -0.2;
    b.upper[3 * n + j] = 0.2;  // joint bias
  }
  b.lower[4 * n] = 0.0;
  b.upper[4 * n] = 0.05;  // command delay [s]
  return b;
}

bool within_bounds(const ParamVector& p, const ParamBounds& b) {
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (p.values[i] < b.lower[i] || p.values[i] > b.upper[i]) return false;
  }
  return true;
}

}  // namespace actkit
