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

#include "actkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "actkit/errors.hpp"

namespace actkit {

using std::numbers::pi;

void validate(const FrequencyResponse& fr) {
  if (fr.frequencies.size() != fr.magnitude_db.size() ||
      fr.frequencies.size() != fr.phase_deg.size()) {
    throw InputError("frequency response arrays differ in length");
  }
  for (std::size_t i = 0; i < fr.frequencies.size(); ++i) {
    if (!(fr.frequencies[i] > 0)) throw InputError("frequencies must be positive");
    if (i > 0 && !(fr.frequencies[i] > fr.frequencies[i - 1])) {
      throw InputError("frequencies must be strictly increasing");
    }
  }
}

std::complex<double> h_q_response(const JointParams& params, const DriveGains& gains,
                                  double delay, double freq) {
  const std::complex<double> s(0.0, 2.0 * pi * freq);
  const std::complex<double> den =
      params.armature_inertia * s * s +
      (params.viscous_damping + gains.d_gain) * s + gains.p_gain;
  return std::exp(-s * delay) * gains.p_gain / den;
}

std::pair<std::complex<double>, std::complex<double>> closed_loop_poles(
    const JointParams& params, const DriveGains& gains) {
  const double a = params.armature_inertia;
  const double b = params.viscous_damping + gains.d_gain;
  const double c = gains.p_gain;
  const double disc = b * b - 4.0 * a * c;
  if (disc >= 0) {
    const double r = std::sqrt(disc);
    return {std::complex<double>((-b + r) / (2 * a), 0.0),
            std::complex<double>((-b - r) / (2 * a), 0.0)};
  }
  const double im = std::sqrt(-disc) / (2 * a);
  return {std::complex<double>(-b / (2 * a), im), std::complex<double>(-b / (2 * a), -im)};
}

double natural_frequency_hz(const JointParams& params, const DriveGains& gains) {
  return std::sqrt(gains.p_gain / params.armature_inertia) / (2.0 * pi);
}

double damped_natural_frequency_hz(const JointParams& params, const DriveGains& gains) {
  return std::abs(closed_loop_poles(params, gains).first.imag()) / (2.0 * pi);
}

double peak_frequency_hz(const JointParams& params, const DriveGains& gains) {
  const double wn = std::sqrt(gains.p_gain / params.armature_inertia);
  const double zeta = (params.viscous_damping + gains.d_gain) /
                      (2.0 * std::sqrt(gains.p_gain * params.armature_inertia));
  const double arg = 1.0 - 2.0 * zeta * zeta;
  if (arg <= 0) return 0.0;  // no resonance peak
  return wn * std::sqrt(arg) / (2.0 * pi);
}

double magnitude_db(std::complex<double> h) { return 20.0 * std::log10(std::abs(h)); }

double phase_deg(std::complex<double> h) { return std::arg(h) * 180.0 / pi; }

namespace {

struct SineFit {
  double amplitude;
  double phase;  // [rad] of A*sin(chirp_phase + phase)
};

// Least-squares fit of y ~ a*sin(phi(t)) + b*cos(phi(t)) + offset over
// [k_lo, k_hi]; the chirp phase is known, so this is exact demodulation.
SineFit fit_sine(std::span<const double> y, std::size_t k_lo, std::size_t k_hi,
                 double dt, const ChirpSpec& spec) {
  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  Eigen::Vector3d atb = Eigen::Vector3d::Zero();
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    const double ph = spec.phase(static_cast<double>(k) * dt);
    const Eigen::Vector3d row(std::sin(ph), std::cos(ph), 1.0);
    ata += row * row.transpose();
    atb += row * y[k];
  }
  const Eigen::Vector3d sol = ata.ldlt().solve(atb);
  return {std::hypot(sol[0], sol[1]), std::atan2(sol[1], sol[0])};
}

}  // namespace

FrequencyResponse empirical_frf(std::span<const double> input,
                                std::span<const double> output, double sample_dt,
                                const ChirpSpec& spec,
                                std::span<const double> freq_grid) {
  validate(spec);
  if (input.size() != output.size()) throw InputError("input/output length mismatch");
  if (input.size() < 2) throw InputError("frf needs at least two samples");
  if (!(sample_dt > 0)) throw InputError("sample_dt must be > 0");
  if (freq_grid.empty()) throw InputError("empty frequency grid");

  const double t_end = static_cast<double>(input.size() - 1) * sample_dt;
  const double sweep_rate = (spec.f_end - spec.f_start) / spec.duration;  // [Hz/s]

  FrequencyResponse fr;
  double prev_phase = 0.0;
  for (std::size_t g = 0; g < freq_grid.size(); ++g) {
    const double f = freq_grid[g];
    if (g > 0 && !(f > freq_grid[g - 1])) {
      throw InputError("frequency grid must be strictly increasing");
    }
    if (f < spec.f_start || f > spec.f_end) {
      throw InputError("grid frequency " + std::to_string(f) +
                       " Hz outside the chirp band [" + std::to_string(spec.f_start) +
                       ", " + std::to_string(spec.f_end) + "]");
    }
    double t_lo = 0.0;
    double t_hi = t_end;
    if (sweep_rate > 0) {
      t_lo = std::clamp((0.9 * f - spec.f_start) / sweep_rate, 0.0, t_end);
      t_hi = std::clamp((1.1 * f - spec.f_start) / sweep_rate, 0.0, t_end);
    }
    const auto k_lo = static_cast<std::size_t>(std::ceil(t_lo / sample_dt));
    const auto k_hi = std::min(input.size() - 1,
                               static_cast<std::size_t>(std::floor(t_hi / sample_dt)));
    if (k_hi <= k_lo ||
        static_cast<double>(k_hi - k_lo) * sample_dt < 1.0 / f) {
      throw InputError("correlation window at " + std::to_string(f) +
                       " Hz is shorter than one cycle");
    }

    const SineFit in = fit_sine(input, k_lo, k_hi, sample_dt, spec);
    const SineFit out = fit_sine(output, k_lo, k_hi, sample_dt, spec);
    if (!(in.amplitude > 0)) {
      throw NumericalError("input has no energy at " + std::to_string(f) + " Hz");
    }

    double phase = (out.phase - in.phase) * 180.0 / pi;
    while (phase > 180.0) phase -= 360.0;
    while (phase <= -180.0) phase += 360.0;
    if (g > 0) {
      // cumulative unwrap along the grid
      while (phase - prev_phase > 180.0) phase -= 360.0;
      while (phase - prev_phase < -180.0) phase += 360.0;
    }
    prev_phase = phase;

    fr.frequencies.push_back(f);
    fr.magnitude_db.push_back(20.0 * std::log10(out.amplitude / in.amplitude));
    fr.phase_deg.push_back(phase);
  }
  validate(fr);
  return fr;
}

FrequencyResponse empirical_frf(const Trajectory& input, const Trajectory& output,
                                const ChirpSpec& spec,
                                std::span<const double> freq_grid, int joint) {
  if (joint < 0 || joint >= input.n_joints || input.n_joints != output.n_joints) {
    throw InputError("bad joint index for frf");
  }
  if (input.samples() != output.samples()) {
    throw InputError("input/output trajectories differ in length");
  }
  const int n = input.n_joints;
  std::vector<double> in(input.samples());
  std::vector<double> out(output.samples());
  for (std::size_t k = 0; k < in.size(); ++k) {
    in[k] = input.targets[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(joint)];
    out[k] = output.positions[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(joint)];
  }
  return empirical_frf(in, out, input.sample_dt(), spec, freq_grid);
}

std::complex<double> pmsm_inner_loop(double resistance, double inductance, double freq) {
  if (!(resistance > 0) || !(inductance > 0)) {
    throw InputError("pmsm_inner_loop needs R > 0 and L > 0");
  }
  const std::complex<double> s(0.0, 2.0 * pi * freq);
  return 1.0 / (inductance * s + resistance);
}

double pmsm_bandwidth(double resistance, double inductance) {
  if (!(resistance > 0) || !(inductance > 0)) {
    throw InputError("pmsm_bandwidth needs R > 0 and L > 0");
  }
  return resistance / (2.0 * pi * inductance);
}

double voltage_headroom(double current, double motor_speed_elec,
                        const MotorParams& motor) {
  if (!(motor.bus_voltage > 0) || !(motor.coil_resistance > 0)) {
    throw InputError("voltage_headroom needs bus_voltage and coil_resistance");
  }
  return motor.bus_voltage - motor.coil_resistance * current -
         motor.emf_constant_or_default() * motor_speed_elec;
}

void validate(const PendulumMeasurement& m) {
  if (!(m.mass > 0) || !(m.com_distance > 0) || !(m.eigenfrequency > 0) ||
      !(m.gravity > 0)) {
    throw InputError("pendulum measurement needs positive mass, r, f and g");
  }
  if (m.sigma_r < 0 || m.sigma_f < 0) throw InputError("pendulum sigmas must be >= 0");
}

PendulumInertia pendulum_inertia(const PendulumMeasurement& meas) {
  validate(meas);
  const double w = 2.0 * pi * meas.eigenfrequency;
  PendulumInertia out;
  out.i_pivot = meas.mass * meas.com_distance * meas.gravity / (w * w);
  out.i_com = out.i_pivot - meas.mass * meas.com_distance * meas.com_distance;
  // first-order propagation over (r, f); m and g are treated as exact
  const double d_dr = meas.mass * meas.gravity / (w * w) - 2.0 * meas.mass * meas.com_distance;
  const double d_df = -2.0 * out.i_pivot / meas.eigenfrequency;
  out.sigma_i_com = std::sqrt(d_dr * d_dr * meas.sigma_r * meas.sigma_r +
                              d_df * d_df * meas.sigma_f * meas.sigma_f);
  return out;
}

void validate(const PlanarLegModel& leg) {
  if (!(leg.base_mass > 0) || !(leg.link_length > 0) || !(leg.hip_inertia > 0) ||
      !(leg.knee_inertia > 0)) {
    throw InputError("planar leg model needs positive mass, length and inertias");
  }
}

double effective_inertia_vertical(const PlanarLegModel& leg, double knee_angle) {
  validate(leg);
  if (!(knee_angle > 0) || !(knee_angle < pi)) {
    throw InputError("vertical case needs knee angle in (0, pi)");
  }
  const double s = std::sin(0.5 * knee_angle);
  return 0.5 * (leg.base_mass * leg.link_length * leg.link_length * s * s +
                0.25 * leg.hip_inertia + leg.knee_inertia);
}

namespace {

double knee_from_hip(double hip_angle, int branch) {
  const double u = std::numbers::sqrt2 - std::cos(hip_angle);
  if (u < -1.0 || u > 1.0) {
    throw InputError("hip angle is kinematically unreachable at this height");
  }
  return hip_angle + static_cast<double>(branch) * std::acos(u);
}

}  // namespace

double horizontal_knee_angle(double hip_angle, int branch) {
  if (branch != 1 && branch != -1) throw InputError("branch must be +1 or -1");
  return knee_from_hip(hip_angle, branch);
}

PlanarBasePose horizontal_base_pose(const PlanarLegModel& leg, double hip_angle,
                                    int branch) {
  validate(leg);
  const double qk = horizontal_knee_angle(hip_angle, branch);
  PlanarBasePose pose;
  pose.x = leg.link_length * (std::sin(hip_angle) - std::sin(qk - hip_angle));
  pose.z = leg.link_length * (std::cos(qk - hip_angle) + std::cos(hip_angle));
  return pose;
}

double effective_inertia_horizontal(const PlanarLegModel& leg, double hip_angle,
                                    int branch) {
  validate(leg);
  if (branch != 1 && branch != -1) throw InputError("branch must be +1 or -1");
  const double h = 1e-6;  // [rad]
  const double qk_p = knee_from_hip(hip_angle + h, branch);
  const double qk_m = knee_from_hip(hip_angle - h, branch);
  const double dqk = (qk_p - qk_m) / (2.0 * h);
  const double x_p =
      leg.link_length * (std::sin(hip_angle + h) - std::sin(qk_p - (hip_angle + h)));
  const double x_m =
      leg.link_length * (std::sin(hip_angle - h) - std::sin(qk_m - (hip_angle - h)));
  const double dx = (x_p - x_m) / (2.0 * h);
  return leg.base_mass * dx * dx + leg.hip_inertia + leg.knee_inertia * dqk * dqk;
}

double reduced_inertia_sum(std::span<const ReducedComponent> components) {
  double total = 0.0;
  for (const auto& c : components) {
    if (!(c.ratio > 0)) throw InputError("reduction ratios must be > 0");
    if (c.inertia < 0) throw InputError("component inertia must be >= 0");
    total += c.inertia * c.ratio * c.ratio;
  }
  return total;
}

}  // namespace actkit
