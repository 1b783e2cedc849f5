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

#include <complex>
#include <span>
#include <vector>

#include "actkit/excitation.hpp"
#include "actkit/trajectory.hpp"
#include "actkit/types.hpp"

namespace actkit {

struct FrequencyResponse {
  std::vector<double> frequencies;  // [Hz], strictly increasing
  std::vector<double> magnitude_db;
  std::vector<double> phase_deg;    // unwrapped along the grid
};

void validate(const FrequencyResponse& fr);

/// Closed-loop target-to-position transfer
/// H_q(s) = exp(-s T_d) * P / (I_a s^2 + (d + D) s + P) at s = i 2 pi f.
std::complex<double> h_q_response(const JointParams& params, const DriveGains& gains,
                                  double delay, double freq);

/// Pole pair of I_a s^2 + (d + D) s + P (complex for the underdamped case).
std::pair<std::complex<double>, std::complex<double>> closed_loop_poles(
    const JointParams& params, const DriveGains& gains);

/// Undamped natural frequency sqrt(P / I_a) / (2 pi) [Hz].
double natural_frequency_hz(const JointParams& params, const DriveGains& gains);

/// Damped natural frequency |Im(pole)| / (2 pi) [Hz]; 0 when overdamped.
double damped_natural_frequency_hz(const JointParams& params, const DriveGains& gains);

/// Frequency of the resonance peak of |H_q| [Hz]; 0 when no peak exists.
double peak_frequency_hz(const JointParams& params, const DriveGains& gains);

double magnitude_db(std::complex<double> h);
double phase_deg(std::complex<double> h);

/// Gain/phase estimation on swept-sine data: per grid frequency, a
/// least-squares fit of sin/cos at the known chirp phase over the window
/// where the instantaneous frequency is within +-10% of the grid point.
/// Phase is unwrapped cumulatively along the grid. Errors when a grid
/// point leaves [f_start, f_end] or its window is shorter than one cycle.
FrequencyResponse empirical_frf(std::span<const double> input,
                                std::span<const double> output, double sample_dt,
                                const ChirpSpec& spec,
                                std::span<const double> freq_grid);

/// Trajectory overload: stimulus = target column, response = position
/// column of the given joint.
FrequencyResponse empirical_frf(const Trajectory& input, const Trajectory& output,
                                const ChirpSpec& spec,
                                std::span<const double> freq_grid, int joint = 0);

/// q-axis admittance I_q/V_q = 1 / (L s + R) at s = i 2 pi f [A/V].
std::complex<double> pmsm_inner_loop(double resistance, double inductance, double freq);

/// Theoretical -3 dB current-loop bandwidth R / (2 pi L) [Hz].
double pmsm_bandwidth(double resistance, double inductance);

/// Remaining q-axis voltage U_max - R i_q - k_w w_e; negative means the
/// current cannot be raised at this operating point.
double voltage_headroom(double current, double motor_speed_elec,
                        const MotorParams& motor);

/// Free-swing pendulum measurement of one link.
struct PendulumMeasurement {
  double mass = 0.0;            // [kg]
  double com_distance = 0.0;    // r, pivot to CoM [m]
  double eigenfrequency = 0.0;  // f [Hz]
  double gravity = 9.806;       // [m/s^2]
  double sigma_r = 0.0;         // [m]
  double sigma_f = 0.0;         // [Hz]
};

void validate(const PendulumMeasurement& m);

struct PendulumInertia {
  double i_pivot = 0.0;      // m r g / (2 pi f)^2 [kg m^2]
  double i_com = 0.0;        // parallel-axis corrected [kg m^2]
  double sigma_i_com = 0.0;  // first-order propagation over (r, f)
};

PendulumInertia pendulum_inertia(const PendulumMeasurement& meas);

/// Planar two-link leg pair with a point base mass, equal link lengths.
struct PlanarLegModel {
  double base_mass = 0.0;    // m [kg]
  double link_length = 0.0;  // l [m]
  double hip_inertia = 0.0;  // I_h [kg m^2]
  double knee_inertia = 0.0; // I_k [kg m^2]
};

void validate(const PlanarLegModel& leg);

/// Position-dependent reduced inertia at the knee for vertical base
/// motion under q_k = 2 q_h, z = 2 l cos(q_k/2):
/// 0.5 * (m l^2 sin^2(q_k/2) + I_h/4 + I_k). Valid for q_k in (0, pi).
double effective_inertia_vertical(const PlanarLegModel& leg, double knee_angle);

/// Reduced inertia at the hip for horizontal base motion at constant
/// height sqrt(2) l, assembled by virtual work from numerically
/// differentiated constraint maps:
/// m (dx/dq_h)^2 + I_h + I_k (dq_k/dq_h)^2. `branch` (+1/-1) selects the
/// knee solution q_k = q_h +- arccos(sqrt(2) - cos q_h).
double effective_inertia_horizontal(const PlanarLegModel& leg, double hip_angle,
                                    int branch);

/// Knee angle on the constant-height constraint (errors outside the
/// reachable hip range).
double horizontal_knee_angle(double hip_angle, int branch);

/// Base coordinates on the constraint; z stays at sqrt(2) l up to
/// roundoff, which the tests use as the constraint residual.
struct PlanarBasePose {
  double x = 0.0;
  double z = 0.0;
};
PlanarBasePose horizontal_base_pose(const PlanarLegModel& leg, double hip_angle,
                                    int branch);

/// One rotating component reflected to the output shaft.
struct ReducedComponent {
  double inertia = 0.0;  // [kg m^2] about its own axis
  double ratio = 1.0;    // component speed / output speed
};

/// d'Alembert reduction: sum of I_c * ratio_c^2.
double reduced_inertia_sum(std::span<const ReducedComponent> components);

/// Inertia of a point mass at a mounting radius.
inline double point_mass_inertia(double mass, double radius) {
  return mass * radius * radius;
}

}  // namespace actkit
