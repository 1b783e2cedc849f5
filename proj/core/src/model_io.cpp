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

#include "actkit/model_io.hpp"

#include "actkit/dynamics.hpp"
#include "actkit/errors.hpp"

namespace actkit {

namespace {

void expect_kind(Config& cfg, const std::string& expected) {
  if (!cfg.has("kind")) return;
  const std::string kind = cfg.get_string("kind");
  if (kind != expected) {
    throw InputError(cfg.name() + ": config kind '" + kind + "' where '" + expected +
                     "' was expected");
  }
}

}  // namespace

RobotModel load_robot_model(Config& cfg) {
  expect_kind(cfg, "robot_model");
  RobotModel m;
  m.name = cfg.get_string("name", "");
  m.n_joints = static_cast<int>(cfg.get_integer("n_joints"));
  if (m.n_joints <= 0) throw InputError(cfg.name() + ": n_joints must be > 0");
  const int n = m.n_joints;

  const auto inertia = cfg.get_per_joint("armature_inertia", n);
  const auto damping = cfg.get_per_joint("viscous_damping", n);
  const auto friction = cfg.get_per_joint("coulomb_friction", n);
  const auto bias = cfg.get_per_joint("joint_bias", n);
  const auto p_gain = cfg.get_per_joint("p_gain", n);
  const auto d_gain = cfg.get_per_joint("d_gain", n);
  m.joints.resize(static_cast<std::size_t>(n));
  m.gains.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    m.joints[ju] = JointParams{inertia[ju], damping[ju], friction[ju], bias[ju]};
    m.gains[ju] = DriveGains{p_gain[ju], d_gain[ju]};
  }

  m.command_delay = cfg.get_number("command_delay", 0.0);
  if (auto fc = cfg.get_number_optional("velocity_filter_cutoff")) {
    m.velocity_filter_cutoff = *fc;
  }

  // motors are optional as a block: without them the simulation applies
  // no torque envelope and the energy report cannot be produced
  if (cfg.has("gear_ratio")) {
    const auto gear = cfg.get_per_joint("gear_ratio", n);
    const auto ki = cfg.get_per_joint("motor_constant", n);
    const auto res = cfg.get_per_joint("coil_resistance", n);
    const auto tmax = cfg.get_per_joint("max_motor_torque", n);
    const auto wmax = cfg.get_per_joint("max_motor_speed", n);
    const auto bus = cfg.get_per_joint("bus_voltage", n);
    const auto regen = cfg.get_per_joint("regen_coefficient", n);
    const auto kw = cfg.get_per_joint_optional("back_emf_constant", n);
    const auto ind = cfg.get_per_joint_optional("phase_inductance", n);
    m.motors.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      auto& mt = m.motors[ju];
      mt.gear_ratio = gear[ju];
      mt.motor_constant = ki[ju];
      mt.coil_resistance = res[ju];
      mt.max_motor_torque = tmax[ju];
      mt.max_motor_speed = wmax[ju];
      mt.bus_voltage = bus[ju];
      mt.regen_coefficient = regen[ju];
      if (kw) mt.back_emf_constant = (*kw)[ju];
      if (ind) mt.phase_inductance = (*ind)[ju];
    }
  }

  if (cfg.has("soft_lower")) {
    const auto sl = cfg.get_per_joint("soft_lower", n);
    const auto su = cfg.get_per_joint("soft_upper", n);
    const auto hl = cfg.get_per_joint("hard_lower", n);
    const auto hu = cfg.get_per_joint("hard_upper", n);
    m.limits.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      m.limits[ju] = JointLimits{sl[ju], su[ju], hl[ju], hu[ju]};
    }
  }

  validate(m);
  return m;
}

SimConfig load_sim_config(Config& cfg) {
  SimConfig sim;
  sim.physics_dt = cfg.get_number("physics_dt", sim.physics_dt);
  sim.control_dt = cfg.get_number("control_dt", sim.control_dt);
  const std::string integrator = cfg.get_string("integrator", "semi-implicit-euler");
  if (integrator != "semi-implicit-euler") {
    throw InputError(cfg.name() + ": unsupported integrator '" + integrator + "'");
  }
  validate(sim);
  return sim;
}

RewardWeights load_reward_weights(Config& cfg) {
  expect_kind(cfg, "rewards");
  RewardWeights w;
  w.c_v = cfg.get_number("c_v", w.c_v);
  w.c_e = cfg.get_number("c_e", w.c_e);
  w.c_c = cfg.get_number("c_c", w.c_c);
  w.c_ftd = cfg.get_number("c_ftd", w.c_ftd);
  w.sigma_v = cfg.get_number("sigma_v", w.sigma_v);
  w.decay_rate = cfg.get_number("decay_rate", w.decay_rate);
  w.ftd_buffer = static_cast<int>(cfg.get_integer("ftd_buffer", w.ftd_buffer));
  validate(w);
  return w;
}

ChirpSpec load_chirp_spec(Config& cfg) {
  expect_kind(cfg, "chirp");
  ChirpSpec spec;
  spec.f_start = cfg.get_number("f_start");
  spec.f_end = cfg.get_number("f_end");
  spec.duration = cfg.get_number("duration");
  spec.amplitude = cfg.get_list("amplitude");
  spec.center = cfg.get_list("center");
  spec.sample_rate = cfg.get_number("sample_rate", 400.0);
  validate(spec);
  return spec;
}

StepSpec load_step_spec(Config& cfg) {
  expect_kind(cfg, "steps");
  StepSpec spec;
  spec.dwell = cfg.get_number("dwell");
  spec.amplitude_range = cfg.get_number("amplitude_range");
  spec.center = cfg.get_number("center", 0.0);
  spec.duration = cfg.get_number("duration");
  spec.sample_rate = cfg.get_number("sample_rate", 400.0);
  spec.seed = static_cast<std::uint64_t>(cfg.get_integer("seed", 0));
  validate(spec);
  return spec;
}

FitConfig load_fit_config(Config& cfg) {
  expect_kind(cfg, "fit");
  FitConfig fit;
  fit.population_size = static_cast<int>(cfg.get_integer("population_size", fit.population_size));
  fit.max_iterations = static_cast<int>(cfg.get_integer("max_iterations", fit.max_iterations));
  fit.initial_sigma = cfg.get_number("initial_sigma", fit.initial_sigma);
  fit.seed = static_cast<std::uint64_t>(cfg.get_integer("seed", 1));
  if (auto t = cfg.get_number_optional("target_loss")) fit.target_loss = *t;
  validate(fit);
  return fit;
}

ParamBounds load_param_bounds(Config& cfg, int n_joints) {
  expect_kind(cfg, "bounds");
  ParamBounds b = default_bounds(n_joints);
  const auto n = static_cast<std::size_t>(n_joints);
  auto fill = [&](const std::string& key, std::vector<double>& side, std::size_t offset,
                  std::size_t count) {
    if (auto vals = cfg.get_per_joint_optional(key, static_cast<int>(count))) {
      for (std::size_t j = 0; j < count; ++j) side[offset + j] = (*vals)[j];
    }
  };
  fill("armature_inertia_lower", b.lower, 0, n);
  fill("armature_inertia_upper", b.upper, 0, n);
  fill("viscous_damping_lower", b.lower, n, n);
  fill("viscous_damping_upper", b.upper, n, n);
  fill("coulomb_friction_lower", b.lower, 2 * n, n);
  fill("coulomb_friction_upper", b.upper, 2 * n, n);
  fill("joint_bias_lower", b.lower, 3 * n, n);
  fill("joint_bias_upper", b.upper, 3 * n, n);
  if (auto v = cfg.get_number_optional("command_delay_lower")) b.lower[4 * n] = *v;
  if (auto v = cfg.get_number_optional("command_delay_upper")) b.upper[4 * n] = *v;
  validate(b, n_joints);
  return b;
}

EnergyTrial load_energy_trial(Config& cfg) {
  expect_kind(cfg, "trial");
  EnergyTrial t;
  t.battery_capacity = cfg.get_number("battery_capacity");
  t.soc_start = cfg.get_number("soc_start");
  t.soc_end = cfg.get_number("soc_end");
  t.duration = cfg.get_number("duration");
  t.distance = cfg.get_number("distance", 0.0);
  t.mass = cfg.get_number("mass", 0.0);
  t.gravity = cfg.get_number("gravity", 9.81);
  validate(t, /*locomotion=*/t.distance > 0);
  return t;
}

PendulumMeasurement load_pendulum_measurement(Config& cfg) {
  expect_kind(cfg, "pendulum");
  PendulumMeasurement m;
  m.mass = cfg.get_number("mass");
  m.com_distance = cfg.get_number("com_distance");
  m.eigenfrequency = cfg.get_number("eigenfrequency");
  m.gravity = cfg.get_number("gravity", 9.806);
  m.sigma_r = cfg.get_number("sigma_r", 0.0);
  m.sigma_f = cfg.get_number("sigma_f", 0.0);
  validate(m);
  return m;
}

PlanarLegModel load_planar_leg(Config& cfg) {
  expect_kind(cfg, "planar_leg");
  PlanarLegModel leg;
  leg.base_mass = cfg.get_number("base_mass");
  leg.link_length = cfg.get_number("link_length");
  leg.hip_inertia = cfg.get_number("hip_inertia");
  leg.knee_inertia = cfg.get_number("knee_inertia");
  validate(leg);
  return leg;
}

std::vector<ReducedComponent> load_reduced_components(Config& cfg) {
  expect_kind(cfg, "reduce");
  const auto inertias = cfg.get_list("inertias");
  std::vector<double> ratios(inertias.size(), 1.0);
  if (auto r = cfg.get_list_optional("ratios")) {
    if (r->size() != inertias.size()) {
      throw InputError(cfg.name() + ": 'ratios' length differs from 'inertias'");
    }
    ratios = *r;
  }
  std::vector<ReducedComponent> out(inertias.size());
  for (std::size_t i = 0; i < inertias.size(); ++i) {
    out[i] = ReducedComponent{inertias[i], ratios[i]};
  }
  return out;
}

}  // namespace actkit
