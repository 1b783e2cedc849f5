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

#include "actkit/energy.hpp"

#include <cmath>

#include "actkit/errors.hpp"

namespace actkit {

void validate(const RewardWeights& w) {
  if (!(w.sigma_v > 0)) throw InputError("sigma_v must be > 0");
  if (w.ftd_buffer < 1) throw InputError("ftd_buffer must be >= 1");
  if (w.decay_rate < 0) throw InputError("decay_rate must be >= 0");
}

void validate(const EnergyTrial& t, bool locomotion) {
  if (!(t.battery_capacity > 0)) throw InputError("battery_capacity must be > 0");
  if (!(t.duration > 0)) throw InputError("trial duration must be > 0");
  if (!(0.0 <= t.soc_end && t.soc_end < t.soc_start && t.soc_start <= 1.0)) {
    throw InputError("trial needs 0 <= soc_end < soc_start <= 1");
  }
  if (locomotion) {
    if (!(t.distance > 0)) throw InputError("locomotion trial needs distance > 0");
    if (!(t.mass > 0)) throw InputError("locomotion trial needs mass > 0");
    if (!(t.gravity > 0)) throw InputError("locomotion trial needs gravity > 0");
  }
}

double joule_heating(std::span<const double> torques,
                     std::span<const MotorParams> motors) {
  if (torques.size() != motors.size()) {
    throw InputError("torque list length does not match motor list");
  }
  double p = 0.0;
  for (std::size_t j = 0; j < torques.size(); ++j) {
    const auto& m = motors[j];
    if (!(m.gear_ratio > 0) || !(m.motor_constant > 0)) {
      throw InputError("joule_heating needs gear_ratio > 0 and motor_constant > 0");
    }
    const double rk = m.gear_ratio * m.motor_constant;
    p += torques[j] * torques[j] * m.coil_resistance / (rk * rk);
  }
  return p;
}

double mech_power(std::span<const double> torques, std::span<const double> velocities,
                  double k_regen) {
  if (torques.size() != velocities.size()) {
    throw InputError("torque and velocity lists differ in length");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < torques.size(); ++j) s += torques[j] * velocities[j];
  if (s > 0) return s;
  if (s < 0) return k_regen * s;
  return 0.0;
}

double pot_power(std::span<const double> body_masses,
                 std::span<const double> vertical_com_velocities, double g) {
  if (body_masses.size() != vertical_com_velocities.size()) {
    throw InputError("mass and velocity lists differ in length");
  }
  double p = 0.0;
  for (std::size_t b = 0; b < body_masses.size(); ++b) {
    p += body_masses[b] * g * vertical_com_velocities[b];
  }
  return p;
}

PowerBreakdown power_breakdown(std::span<const double> torques,
                               std::span<const double> velocities,
                               std::span<const MotorParams> motors, double k_regen,
                               double potential_power) {
  PowerBreakdown p;
  p.p_electrical = joule_heating(torques, motors);
  p.p_mechanical = mech_power(torques, velocities, k_regen);
  p.p_potential = potential_power;
  p.p_total = p.p_electrical + p.p_mechanical + p.p_potential;
  return p;
}

double gamma_v(std::span<const double> commanded_velocity) {
  double sq = 0.0;
  for (double v : commanded_velocity) sq += v * v;
  return 1.0 / (sq + 1.0);
}

double reward_velocity(std::span<const double, 3> cmd,
                       std::span<const double, 3> measured, double sigma_v) {
  if (!(sigma_v > 0)) throw InputError("sigma_v must be > 0");
  const double ex = cmd[0] - measured[0];
  const double ey = cmd[1] - measured[1];
  const double ew = cmd[2] - measured[2];
  return std::exp(-(ex * ex + ey * ey) / sigma_v) + std::exp(-(ew * ew) / sigma_v);
}

double reward_ftd(std::span<const std::vector<double>> foot_speed_history,
                  std::span<const bool> touchdown_flags) {
  if (foot_speed_history.size() != touchdown_flags.size()) {
    throw InputError("foot history and touchdown lists differ in length");
  }
  double r = 0.0;
  for (std::size_t f = 0; f < foot_speed_history.size(); ++f) {
    if (!touchdown_flags[f]) continue;
    const auto& hist = foot_speed_history[f];
    if (hist.empty()) throw InputError("empty foot speed history");
    double peak = hist[0];
    for (double v : hist) peak = std::max(peak, v);
    r += peak;
  }
  return r;
}

double penalty_schedule(double iteration, double decay_rate) {
  if (decay_rate < 0) throw InputError("decay_rate must be >= 0");
  return 1.0 - std::exp(-decay_rate * iteration);
}

double entropy_schedule(double t, double e0, double e_inf, double eta, double t_turn) {
  if (!(eta > 0)) throw InputError("entropy schedule slope must be > 0");
  const double eps = 0.5 - 0.5 * std::tanh(eta * (t - t_turn));
  return e_inf + eps * (e0 - e_inf);
}

double total_reward(const RewardTerms& terms, const RewardWeights& weights,
                    double iteration) {
  validate(weights);
  const double kappa = penalty_schedule(iteration, weights.decay_rate);
  return weights.c_v * terms.r_v + weights.c_c * terms.r_c +
         kappa * (weights.c_e * terms.r_e + weights.c_ftd * terms.r_ftd);
}

double average_power(const EnergyTrial& trial) {
  validate(trial, /*locomotion=*/false);
  const double joules = trial.battery_capacity * 3600.0 * (trial.soc_start - trial.soc_end);
  return joules / trial.duration;
}

CotBreakdown cot_decompose(const EnergyTrial& track, const EnergyTrial& rest,
                           const EnergyTrial& off) {
  validate(track, /*locomotion=*/true);
  validate(rest, /*locomotion=*/false);
  validate(off, /*locomotion=*/false);
  if (rest.distance > 0 || off.distance > 0) {
    throw InputError("rest/off calibration trials must not carry a distance");
  }
  const double p_rest = average_power(rest);
  const double p_off = average_power(off);
  if (p_rest < p_off) {
    throw InputError("calibration trials are inconsistent: P_rest < P_off");
  }
  const double weight_distance = track.mass * track.gravity * track.distance;
  CotBreakdown out;
  out.cot = track.battery_capacity * 3600.0 * (track.soc_start - track.soc_end) /
            weight_distance;
  out.coe = p_off * track.duration / weight_distance;
  out.cod = (p_rest - p_off) * track.duration / weight_distance;
  // remainder keeps the decomposition identity exact
  out.col = out.cot - out.coe - out.cod;
  return out;
}

}  // namespace actkit
