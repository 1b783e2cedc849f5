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

#include "actkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "actkit/errors.hpp"

namespace actkit {

namespace {

inline double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// One joint's flattened parameters for the hot rollout loop.
struct JointSlot {
  double inv_inertia;
  double damping;
  double friction;
  double bias;
  double p_gain;
  double d_gain;
  bool has_limits;
  JointLimits limits;
  bool has_envelope;
  SaturationEnvelope envelope;  // joint side
};

}  // namespace

// ---------------------------------------------------------------------------
// type validation

int SimConfig::substeps() const {
  const double ratio = control_dt / physics_dt;
  const int n = static_cast<int>(std::lround(ratio));
  if (n < 1 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
    throw InputError("control_dt must be an integer multiple of physics_dt");
  }
  return n;
}

void validate(const JointParams& p, double bias_bound) {
  if (!(p.armature_inertia > 0)) throw InputError("armature_inertia must be > 0");
  if (p.viscous_damping < 0) throw InputError("viscous_damping must be >= 0");
  if (p.coulomb_friction < 0) throw InputError("coulomb_friction must be >= 0");
  if (std::abs(p.joint_bias) > bias_bound) {
    throw InputError("joint_bias exceeds the configured bound of " +
                     std::to_string(bias_bound) + " rad");
  }
}

void validate(const DriveGains& g) {
  if (!(g.p_gain > 0)) throw InputError("p_gain must be > 0");
  if (g.d_gain < 0) throw InputError("d_gain must be >= 0");
}

void validate(const MotorParams& m) {
  if (!(m.gear_ratio > 0)) throw InputError("gear_ratio must be > 0");
  if (!(m.motor_constant > 0)) throw InputError("motor_constant must be > 0");
  if (!(m.coil_resistance > 0)) throw InputError("coil_resistance must be > 0");
  if (m.regen_coefficient < 0 || m.regen_coefficient > 1) {
    throw InputError("regen_coefficient must lie in [0, 1]");
  }
}

void validate(const SaturationEnvelope& e) {
  if (!(e.max_torque > 0)) throw InputError("envelope max_torque must be > 0");
  if (!(0 < e.emf_corner_speed && e.emf_corner_speed < e.zero_torque_speed)) {
    throw InputError("envelope needs 0 < emf_corner_speed < zero_torque_speed");
  }
}

void validate(const JointLimits& l) {
  if (!(l.hard_lower < l.soft_lower && l.soft_lower < l.soft_upper &&
        l.soft_upper < l.hard_upper)) {
    throw InputError("joint limits must satisfy hard_lower < soft_lower < soft_upper < hard_upper");
  }
}

void validate(const RobotModel& m) {
  if (m.n_joints <= 0) throw InputError("robot model needs n_joints > 0");
  const auto n = static_cast<std::size_t>(m.n_joints);
  if (m.joints.size() != n) throw InputError("joints list length != n_joints");
  if (m.gains.size() != n) throw InputError("gains list length != n_joints");
  if (!m.motors.empty() && m.motors.size() != n) {
    throw InputError("motors list length != n_joints");
  }
  if (!m.limits.empty() && m.limits.size() != n) {
    throw InputError("limits list length != n_joints");
  }
  if (m.command_delay < 0) throw InputError("command_delay must be >= 0");
  if (m.velocity_filter_cutoff && !(*m.velocity_filter_cutoff > 0)) {
    throw InputError("velocity_filter_cutoff must be > 0 when set");
  }
  for (const auto& j : m.joints) validate(j);
  for (const auto& g : m.gains) validate(g);
  for (const auto& mp : m.motors) validate(mp);
  for (const auto& l : m.limits) validate(l);
}

void validate(const SimConfig& c) {
  if (!(c.physics_dt > 0)) throw InputError("physics_dt must be > 0");
  if (c.physics_dt > c.control_dt) throw InputError("physics_dt must be <= control_dt");
  c.substeps();
}

// ---------------------------------------------------------------------------
// envelope

double SaturationEnvelope::driving_limit(double speed) const {
  const double w = std::abs(speed);
  if (w <= emf_corner_speed) return max_torque;
  if (w >= zero_torque_speed) return 0.0;
  return max_torque * (zero_torque_speed - w) / (zero_torque_speed - emf_corner_speed);
}

SaturationEnvelope SaturationEnvelope::scaled_by_gear(double gear_ratio) const {
  SaturationEnvelope out;
  out.max_torque = max_torque * gear_ratio;
  out.emf_corner_speed = emf_corner_speed / gear_ratio;
  out.zero_torque_speed = zero_torque_speed / gear_ratio;
  return out;
}

SaturationEnvelope build_envelope(const MotorParams& motor) {
  validate(motor);
  if (!(motor.bus_voltage > 0)) {
    throw InputError("build_envelope needs bus_voltage > 0");
  }
  const double k_w = motor.emf_constant_or_default();
  if (!(k_w > 0)) throw InputError("back_emf_constant must be > 0");
  if (!(motor.max_motor_torque > 0)) {
    throw InputError("build_envelope needs max_motor_torque > 0");
  }
  SaturationEnvelope env;
  env.max_torque = motor.max_motor_torque;
  // corner: where k_i (u - k_w w) / R falls to the ceiling
  env.emf_corner_speed =
      (motor.bus_voltage -
       motor.max_motor_torque * motor.coil_resistance / motor.motor_constant) /
      k_w;
  env.zero_torque_speed = motor.bus_voltage / k_w;
  if (!(env.emf_corner_speed > 0)) {
    throw InputError(
        "stall torque k_i*u/R does not exceed max_motor_torque; the envelope "
        "has no flat region (check motor constants)");
  }
  validate(env);
  return env;
}

double saturate_torque(double cmd, double speed, const SaturationEnvelope& env) {
  // torque against the motion is only demagnetization-limited; torque with
  // it loses back-EMF headroom
  const double upper = speed > 0 ? env.driving_limit(speed) : env.max_torque;
  const double lower = speed < 0 ? -env.driving_limit(speed) : -env.max_torque;
  return std::clamp(cmd, lower, upper);
}

// ---------------------------------------------------------------------------
// control law

double pd_torque(double target, const JointState& state, const DriveGains& gains,
                 double bias) {
  return gains.p_gain * (target - state.position + bias) -
         gains.d_gain * state.filtered_velocity;
}

double limit_safe_target(double raw_target, double position, const JointLimits& limits) {
  if (position > limits.soft_upper && raw_target > limits.hard_upper) {
    const double a = std::min(
        1.0, (position - limits.soft_upper) / (limits.hard_upper - limits.soft_upper));
    return raw_target - a * (raw_target - limits.hard_upper);
  }
  if (position < limits.soft_lower && raw_target < limits.hard_lower) {
    const double a = std::min(
        1.0, (limits.soft_lower - position) / (limits.soft_lower - limits.hard_lower));
    return raw_target - a * (raw_target - limits.hard_lower);
  }
  return raw_target;
}

// ---------------------------------------------------------------------------
// integration

double velocity_filter_pole(double cutoff_hz, double dt) {
  if (!(cutoff_hz > 0) || !(dt > 0)) throw InputError("filter cutoff and dt must be > 0");
  return std::exp(-2.0 * std::numbers::pi * cutoff_hz * dt);
}

JointState step_joint(const JointState& state, double applied_torque,
                      const JointParams& params, double dt, double filter_pole) {
  const double drive = applied_torque - params.viscous_damping * state.velocity;
  double v_new;
  if (std::abs(state.velocity) < kStickVelocityEps &&
      std::abs(drive) <= params.coulomb_friction) {
    v_new = 0.0;  // static friction holds
  } else {
    const double dir =
        std::abs(state.velocity) >= kStickVelocityEps ? sign(state.velocity) : sign(drive);
    const double v_free = state.velocity + drive * dt / params.armature_inertia;
    v_new = v_free - dir * params.coulomb_friction * dt / params.armature_inertia;
    // Coulomb torque can stop the joint but never push it backwards
    if (v_new * dir < 0 && v_free * dir >= 0) v_new = 0.0;
  }
  JointState out;
  out.velocity = v_new;
  out.position = state.position + v_new * dt;
  out.filtered_velocity =
      filter_pole > 0 ? filter_pole * state.filtered_velocity + (1.0 - filter_pole) * v_new
                      : v_new;
  return out;
}

// ---------------------------------------------------------------------------
// rollout

Trajectory rollout(const RobotModel& model, const Trajectory& targets,
                   const SimConfig& sim, std::span<const JointState> initial) {
  validate(model);
  validate(targets);
  validate(sim);
  if (targets.n_joints != model.n_joints) {
    throw InputError("target trajectory has " + std::to_string(targets.n_joints) +
                     " joints, model has " + std::to_string(model.n_joints));
  }
  if (initial.size() != static_cast<std::size_t>(model.n_joints)) {
    throw InputError("initial state list length != n_joints");
  }
  for (const auto& s : initial) {
    if (!std::isfinite(s.position) || !std::isfinite(s.velocity) ||
        !std::isfinite(s.filtered_velocity)) {
      throw InputError("non-finite initial joint state");
    }
  }
  return detail::rollout_prevalidated(model, targets, sim, initial);
}

Trajectory detail::rollout_prevalidated(const RobotModel& model,
                                        const Trajectory& targets, const SimConfig& sim,
                                        std::span<const JointState> initial) {
  const int n = model.n_joints;
  const std::size_t steps = targets.samples();
  const double control_dt = targets.sample_dt();
  if (std::abs(control_dt - sim.control_dt) > 1e-9 * std::max(1.0, sim.control_dt)) {
    throw InputError("trajectory sampling period does not match sim control_dt");
  }
  const int substeps = sim.substeps();
  const double dt = sim.physics_dt;
  const double filter_pole =
      model.velocity_filter_cutoff
          ? velocity_filter_pole(*model.velocity_filter_cutoff, dt)
          : 0.0;

  std::vector<JointSlot> slots(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& s = slots[static_cast<std::size_t>(j)];
    const auto ju = static_cast<std::size_t>(j);
    s.inv_inertia = 1.0 / model.joints[ju].armature_inertia;
    s.damping = model.joints[ju].viscous_damping;
    s.friction = model.joints[ju].coulomb_friction;
    s.bias = model.joints[ju].joint_bias;
    s.p_gain = model.gains[ju].p_gain;
    s.d_gain = model.gains[ju].d_gain;
    s.has_limits = !model.limits.empty();
    if (s.has_limits) s.limits = model.limits[ju];
    s.has_envelope = !model.motors.empty();
    if (s.has_envelope) {
      s.envelope = build_envelope(model.motors[ju]).scaled_by_gear(model.motors[ju].gear_ratio);
    }
  }

  // fractional-sample delay on the target stream; snap near-integer delays
  // so whole-sample shifts reproduce exactly
  double delay_samples = model.command_delay / control_dt;
  if (std::abs(delay_samples - std::round(delay_samples)) < 1e-9) {
    delay_samples = std::round(delay_samples);
  }

  std::vector<double> q(static_cast<std::size_t>(n));
  std::vector<double> v(static_cast<std::size_t>(n));
  std::vector<double> vf(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    q[static_cast<std::size_t>(j)] = initial[static_cast<std::size_t>(j)].position;
    v[static_cast<std::size_t>(j)] = initial[static_cast<std::size_t>(j)].velocity;
    vf[static_cast<std::size_t>(j)] = initial[static_cast<std::size_t>(j)].filtered_velocity;
  }

  Trajectory out;
  out.n_joints = n;
  out.time = targets.time;
  out.targets = targets.targets;
  out.positions.resize(steps * static_cast<std::size_t>(n));
  out.velocities.resize(steps * static_cast<std::size_t>(n));
  out.torques.resize(steps * static_cast<std::size_t>(n));

  for (std::size_t k = 0; k < steps; ++k) {
    // state is reported at the sample instant, before this step's control
    for (int j = 0; j < n; ++j) {
      out.positions[k * n + j] = q[static_cast<std::size_t>(j)];
      out.velocities[k * n + j] = v[static_cast<std::size_t>(j)];
    }

    const double pos = static_cast<double>(k) - delay_samples;
    std::size_t lo;
    double frac;
    if (pos <= 0.0) {
      lo = 0;
      frac = 0.0;
    } else {
      lo = static_cast<std::size_t>(pos);
      frac = pos - static_cast<double>(lo);
      if (lo >= steps - 1) {
        lo = steps - 1;
        frac = 0.0;
      }
    }

    for (int j = 0; j < n; ++j) {
      auto& s = slots[static_cast<std::size_t>(j)];
      const double t0 = targets.targets[lo * n + j];
      double target =
          frac == 0.0 ? t0 : t0 + frac * (targets.targets[(lo + 1) * n + j] - t0);
      if (s.has_limits) target = limit_safe_target(target, q[static_cast<std::size_t>(j)], s.limits);

      double tau = s.p_gain * (target - q[static_cast<std::size_t>(j)] + s.bias) -
                   s.d_gain * vf[static_cast<std::size_t>(j)];
      if (s.has_envelope) tau = saturate_torque(tau, v[static_cast<std::size_t>(j)], s.envelope);
      out.torques[k * n + j] = tau;

      // physics substeps with the torque held (zero-order hold)
      double qj = q[static_cast<std::size_t>(j)];
      double vj = v[static_cast<std::size_t>(j)];
      double vfj = vf[static_cast<std::size_t>(j)];
      for (int i = 0; i < substeps; ++i) {
        const double drive = tau - s.damping * vj;
        double v_new;
        if (std::abs(vj) < kStickVelocityEps && std::abs(drive) <= s.friction) {
          v_new = 0.0;
        } else {
          const double dir = std::abs(vj) >= kStickVelocityEps ? sign(vj) : sign(drive);
          const double v_free = vj + drive * dt * s.inv_inertia;
          v_new = v_free - dir * s.friction * dt * s.inv_inertia;
          if (v_new * dir < 0 && v_free * dir >= 0) v_new = 0.0;
        }
        vj = v_new;
        qj += vj * dt;
        vfj = filter_pole > 0 ? filter_pole * vfj + (1.0 - filter_pole) * vj : vj;
      }
      q[static_cast<std::size_t>(j)] = qj;
      v[static_cast<std::size_t>(j)] = vj;
      vf[static_cast<std::size_t>(j)] = vfj;
    }
  }
  return out;
}

Trajectory rollout(const RobotModel& model, const Trajectory& targets,
                   const SimConfig& sim) {
  std::vector<JointState> initial(static_cast<std::size_t>(model.n_joints));
  if (!targets.positions.empty()) {
    for (int j = 0; j < model.n_joints; ++j) {
      auto& s = initial[static_cast<std::size_t>(j)];
      s.position = targets.position(0, j);
      s.velocity = targets.velocities.empty() ? 0.0 : targets.velocity(0, j);
      s.filtered_velocity = s.velocity;
    }
  }
  return rollout(model, targets, sim, initial);
}

}  // namespace actkit
