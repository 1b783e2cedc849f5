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

#include <span>
#include <vector>

#include "actkit/trajectory.hpp"
#include "actkit/types.hpp"

namespace actkit {

/// Unsaturated PD torque: P * (target - q + bias) - D * qd, where qd is
/// the filtered velocity (equal to the raw one without a filter).
double pd_torque(double target, const JointState& state, const DriveGains& gains,
                 double bias);

/// Motor-side torque-speed envelope from the electrical constants:
/// driving torque is min(max_motor_torque, k_i * (u - k_w * w) / R),
/// clamped at zero. Requires stall torque above the ceiling so the
/// envelope corner is a real operating point.
SaturationEnvelope build_envelope(const MotorParams& motor);

/// Clamps `cmd` to the envelope at `speed`. Torque opposing the motion
/// sees the flat ceiling; torque driving it sees the back-EMF limited
/// value. Never flips the sign of `cmd`. `cmd` and `speed` must be on the
/// same side (motor or joint) the envelope was built for.
double saturate_torque(double cmd, double speed, const SaturationEnvelope& env);

/// Hard-limit-safe target: when the joint sits inside the soft band and
/// the raw target is infeasible, the target is interpolated toward the
/// hard bound so the PD term vanishes exactly at the hard limit.
double limit_safe_target(double raw_target, double position, const JointLimits& limits);

/// One semi-implicit Euler step of I_a * qdd = tau - d * qd - tau_f * sgn(qd).
/// Coulomb friction uses a Karnopp-style stick rule: at rest (|qd| below
/// `stick_velocity_eps`) the joint stays at rest unless the non-friction
/// torque exceeds tau_f, and friction alone never reverses motion within
/// a step. `filter_pole` is the discrete pole exp(-2*pi*f_c*dt) of the
/// optional velocity filter; 0 keeps filtered velocity equal to raw.
JointState step_joint(const JointState& state, double applied_torque,
                      const JointParams& params, double dt,
                      double filter_pole = 0.0);

inline constexpr double kStickVelocityEps = 1e-6;  // [rad/s]

/// Discrete pole for a first-order low-pass at `cutoff_hz` sampled at `dt`.
double velocity_filter_pole(double cutoff_hz, double dt);

/// Replays `targets.targets` through the model: per control step the
/// chain is limit clamp -> PD -> envelope saturation -> physics substeps;
/// the global command delay acts on the target stream as a fractional-
/// sample delay line with linear interpolation (targets before t=0 hold
/// the first sample). Returns positions, velocities and applied torques
/// sampled at the target instants; row 0 is the initial state. Output is
/// bit-identical across runs for identical inputs.
Trajectory rollout(const RobotModel& model, const Trajectory& targets,
                   const SimConfig& sim, std::span<const JointState> initial);

/// Convenience overload: initial state taken from the first sample of
/// `targets` when it carries positions/velocities, else zeros.
Trajectory rollout(const RobotModel& model, const Trajectory& targets,
                   const SimConfig& sim);

namespace detail {
/// rollout body without input validation; population evaluation validates
/// once and replays many candidates against the same data.
Trajectory rollout_prevalidated(const RobotModel& model, const Trajectory& targets,
                                const SimConfig& sim,
                                std::span<const JointState> initial);
}  // namespace detail

}  // namespace actkit
