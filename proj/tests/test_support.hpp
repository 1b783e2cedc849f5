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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "actkit/types.hpp"

namespace actkit::test {

// Deterministic normal deviates for synthetic measurement noise; keeps
// fixtures byte-stable across library implementations.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed) : rng_(seed) {}

  double gaussian(double sigma) {
    if (have_spare_) {
      have_spare_ = false;
      return spare_ * sigma;
    }
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a) * sigma;
  }

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline MotorParams hip_motor() {
  MotorParams m;
  m.gear_ratio = 5.6;
  m.motor_constant = 0.59;
  m.coil_resistance = 1.04;
  m.max_motor_torque = 25.0;
  m.max_motor_speed = 94.0;
  m.bus_voltage = 48.0;
  m.regen_coefficient = 0.3;
  return m;
}

inline MotorParams knee_motor() {
  MotorParams m;
  m.gear_ratio = 5.6;
  m.motor_constant = 1.25;
  m.coil_resistance = 1.71;
  m.max_motor_torque = 35.0;
  m.max_motor_speed = 29.0;
  m.bus_voltage = 48.0;
  m.regen_coefficient = 0.3;
  return m;
}

// 52 kg quadruped bench model: 4 legs x (HAA, HFE, KFE), heavier hip
// drives and light knees, 7.5 ms command delay. Values are the fitted
// reference set used across the identification tests.
inline RobotModel reference_quadruped() {
  RobotModel m;
  m.name = "quadruped12";
  m.n_joints = 12;
  const std::vector<double> inertia = {0.140, 0.106, 0.0033, 0.120, 0.120, 0.0034,
                                       0.140, 0.110, 0.0036, 0.140, 0.110, 0.0035};
  const std::vector<double> damping = {1.7, 0.17, 2.1, 1.7, 0.22, 2.3,
                                       0.50, 0.63, 3.9, 0.70, 0.83, 2.3};
  const std::vector<double> friction = {0.0093, 0.044, 0.00025, 0.0036, 0.036, 0.0015,
                                        0.0, 0.031, 0.0010, 0.0, 0.035, 0.00050};
  const std::vector<double> bias = {0.0017, -0.011, -0.028, -0.0029, -0.012, -0.026,
                                    -0.0011, -0.017, -0.026, -0.00070, -0.0148, -0.0275};
  for (int j = 0; j < 12; ++j) {
    m.joints.push_back(JointParams{inertia[static_cast<std::size_t>(j)],
                                   damping[static_cast<std::size_t>(j)],
                                   friction[static_cast<std::size_t>(j)],
                                   bias[static_cast<std::size_t>(j)]});
    m.gains.push_back(DriveGains{60.0, 2.0});
    m.motors.push_back(j % 3 == 2 ? knee_motor() : hip_motor());
  }
  m.command_delay = 0.0075;
  return m;
}

inline RobotModel single_joint_model(double inertia, double damping, double friction,
                                     double bias, double p_gain = 60.0,
                                     double d_gain = 2.0, double delay = 0.0) {
  RobotModel m;
  m.name = "single";
  m.n_joints = 1;
  m.joints.push_back(JointParams{inertia, damping, friction, bias});
  m.gains.push_back(DriveGains{p_gain, d_gain});
  m.command_delay = delay;
  return m;
}

// Closed-form response of I qdd + (d + D) qd + P q = P target for a
// constant target from rest: the independent oracle for the linear
// regime (underdamped case only).
inline double second_order_step_response(double t, double q0, double target,
                                         double inertia, double total_damping,
                                         double p_gain) {
  const double wn = std::sqrt(p_gain / inertia);
  const double zeta = total_damping / (2.0 * std::sqrt(p_gain * inertia));
  const double wd = wn * std::sqrt(1.0 - zeta * zeta);
  const double x0 = q0 - target;
  const double e = std::exp(-zeta * wn * t);
  return target + x0 * e * (std::cos(wd * t) + zeta * wn / wd * std::sin(wd * t));
}

}  // namespace actkit::test
