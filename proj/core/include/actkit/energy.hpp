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

#include "actkit/types.hpp"

namespace actkit {

/// One timestep of the power model. `p_total` is the stored sum of the
/// three terms; `p_electrical` is always non-negative.
struct PowerBreakdown {
  double p_electrical = 0.0;  // Joule heating [W]
  double p_mechanical = 0.0;  // regen-scaled shaft power [W]
  double p_potential = 0.0;   // gravitational power [W]
  double p_total = 0.0;
};

struct RewardWeights {
  double c_v = 0.2;
  double c_e = -16e-5;
  double c_c = -1.0;
  double c_ftd = -0.1;
  double sigma_v = 0.25;     // [(m/s)^2] tracking width
  double decay_rate = 0.0;   // lambda [1/iteration] of the penalty ramp
  int ftd_buffer = 3;        // touchdown history length
};

void validate(const RewardWeights& w);

/// Battery discharge trial: a locomotion run (distance > 0) or a static
/// calibration (distance == 0).
struct EnergyTrial {
  double battery_capacity = 0.0;  // E_B [Wh]
  double soc_start = 0.0;         // fraction of capacity
  double soc_end = 0.0;
  double duration = 0.0;          // [s]
  double distance = 0.0;          // [m], 0 when not a locomotion trial
  double mass = 0.0;              // [kg]
  double gravity = 9.81;          // [m/s^2]
};

void validate(const EnergyTrial& t, bool locomotion);

struct CotBreakdown {
  double cot = 0.0;
  double coe = 0.0;  // electronics (compute/sensing)
  double cod = 0.0;  // drives idle (inverter switching)
  double col = 0.0;  // locomotion remainder
};

/// Winding losses sum tau^2 * R / (r^2 * k_i^2) over joints.
double joule_heating(std::span<const double> torques,
                     std::span<const MotorParams> motors);

/// Shaft power tau . qd; negative products are scaled by the
/// regeneration coefficient instead of counted in full.
double mech_power(std::span<const double> torques,
                  std::span<const double> velocities, double k_regen);

/// Gravitational power sum m_b * g * v_z over bodies (v_z along -g).
double pot_power(std::span<const double> body_masses,
                 std::span<const double> vertical_com_velocities, double g);

PowerBreakdown power_breakdown(std::span<const double> torques,
                               std::span<const double> velocities,
                               std::span<const MotorParams> motors,
                               double k_regen,
                               double potential_power = 0.0);

/// Velocity-dependent energy normalization 1 / (||v_cmd||^2 + 1).
double gamma_v(std::span<const double> commanded_velocity);

/// exp(-||v_xy err||^2 / sigma) + exp(-(yaw rate err)^2 / sigma), in (0, 2].
double reward_velocity(std::span<const double, 3> cmd,
                       std::span<const double, 3> measured, double sigma_v);

/// Sums, over feet that touch down this step, the maximum foot speed in
/// the recent history window. `history` is per foot, each of length
/// ftd_buffer, most recent last.
double reward_ftd(std::span<const std::vector<double>> foot_speed_history,
                  std::span<const bool> touchdown_flags);

/// kappa(t) = 1 - exp(-lambda t): ramps energy/touchdown penalties in.
double penalty_schedule(double iteration, double decay_rate);

/// Smooth tanh annealing from e0 to e_inf with midpoint at t_turn.
double entropy_schedule(double t, double e0, double e_inf, double eta, double t_turn);

/// Instantaneous values of the four terms; r_e carries the raw
/// gamma-scaled power, the sign convention lives in the weights.
struct RewardTerms {
  double r_v = 0.0;
  double r_e = 0.0;
  double r_c = 0.0;  // collision indicator, 0 or 1
  double r_ftd = 0.0;
};

/// c_v r_v + c_c r_c + kappa(iteration) * (c_e r_e + c_ftd r_ftd).
double total_reward(const RewardTerms& terms, const RewardWeights& weights,
                    double iteration);

/// Mean battery power E_B * dSoC / t, in watts.
double average_power(const EnergyTrial& trial);

/// Splits the track cost of transport into electronics, drive-idle and
/// locomotion shares using the two static calibration trials. The
/// locomotion share is the remainder, so cot == coe + cod + col by
/// construction.
CotBreakdown cot_decompose(const EnergyTrial& track, const EnergyTrial& rest,
                           const EnergyTrial& off);

}  // namespace actkit
