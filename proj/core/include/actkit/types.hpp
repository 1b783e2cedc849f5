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

#include <optional>
#include <string>
#include <vector>

namespace actkit {

/// Per-joint dynamic parameters of the mass-damper-friction joint model.
/// All quantities are SI and expressed on the joint (output) side.
struct JointParams {
  double armature_inertia = 0.0;  // I_a  [kg m^2]
  double viscous_damping = 0.0;   // d    [N m s / rad]
  double coulomb_friction = 0.0;  // tau_f [N m]
  double joint_bias = 0.0;        // q_b  [rad]
};

/// PD gains of the joint position controller (torque per rad / rad s^-1).
struct DriveGains {
  double p_gain = 0.0;  // P_tau [N m / rad]
  double d_gain = 0.0;  // D_tau [N m s / rad]
};

/// Electrical and drivetrain constants of one motor unit.
/// `back_emf_constant` and `phase_inductance` are optional; when the
/// back-EMF constant is absent it defaults to the motor constant
/// (SI-consistent sinusoidal-machine convention).
struct MotorParams {
  double gear_ratio = 1.0;        // r, motor speed / joint speed
  double motor_constant = 0.0;    // k_i [N m / A]
  double coil_resistance = 0.0;   // R [Ohm]
  std::optional<double> phase_inductance;   // L [H]
  std::optional<double> back_emf_constant;  // k_w [V s / rad]
  double max_motor_torque = 0.0;  // [N m], motor side
  double max_motor_speed = 0.0;   // [rad/s], motor side
  double bus_voltage = 0.0;       // u [V]
  double regen_coefficient = 0.0; // k_regen in [0, 1]

  double emf_constant_or_default() const {
    return back_emf_constant.value_or(motor_constant);
  }
};

/// Torque-speed operating boundary. Torque driving in the direction of
/// motion is capped by the flat ceiling up to `emf_corner_speed` and then
/// falls linearly to zero at `zero_torque_speed`; opposing torque sees the
/// flat ceiling at any speed. Units follow whichever side (motor or joint)
/// the envelope was built for.
struct SaturationEnvelope {
  double max_torque = 0.0;        // flat ceiling [N m]
  double emf_corner_speed = 0.0;  // [rad/s]
  double zero_torque_speed = 0.0; // [rad/s]

  /// Available driving-torque magnitude at |speed| (non-increasing).
  double driving_limit(double speed) const;
  /// Rescale a motor-side envelope to the joint side (torque *r, speed /r).
  SaturationEnvelope scaled_by_gear(double gear_ratio) const;
};

/// Soft/hard position bounds used by the hard-limit-safe target clamp.
struct JointLimits {
  double soft_lower = 0.0;
  double soft_upper = 0.0;
  double hard_lower = 0.0;
  double hard_upper = 0.0;
};

/// Complete simulable description of one robot: n independent PD-driven
/// joints, optional motor envelopes and position limits, one global
/// command delay and an optional first-order velocity filter feeding the
/// PD law.
struct RobotModel {
  int n_joints = 0;
  std::vector<JointParams> joints;
  std::vector<DriveGains> gains;
  std::vector<MotorParams> motors;   // empty: no torque saturation
  std::vector<JointLimits> limits;   // empty: no target clamping
  double command_delay = 0.0;        // T_d [s]
  std::optional<double> velocity_filter_cutoff;  // [Hz]

  std::string name;  // free-form label carried through outputs
};

/// Instantaneous state of one joint. `filtered_velocity` equals
/// `velocity` when no filter is configured.
struct JointState {
  double position = 0.0;           // q  [rad]
  double velocity = 0.0;           // qd [rad/s]
  double filtered_velocity = 0.0;  // qd seen by the PD law
};

/// Fixed-step integration settings. The control loop runs every
/// `control_dt` and the physics substeps at `physics_dt`; the control
/// period must be an integer multiple of the physics period.
struct SimConfig {
  double physics_dt = 2.5e-4;
  double control_dt = 2.5e-3;  // 400 Hz, matching typical drive logging

  int substeps() const;
};

void validate(const JointParams& p, double bias_bound = 0.2);
void validate(const DriveGains& g);
void validate(const MotorParams& m);
void validate(const SaturationEnvelope& e);
void validate(const JointLimits& l);
void validate(const RobotModel& m);
void validate(const SimConfig& c);

}  // namespace actkit
