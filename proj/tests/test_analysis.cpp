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

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "actkit/dynamics.hpp"
#include "actkit/errors.hpp"
#include "test_support.hpp"

using namespace actkit;
using std::numbers::pi;

TEST_CASE("h_q_response") {
  JointParams p{6.28e-2, 0.0, 0.0, 0.0};
  DriveGains g{60.0, 2.0};

  SUBCASE("unity DC gain") {
    CHECK(magnitude_db(h_q_response(p, g, 0.0, 1e-6)) == doctest::Approx(0.0).epsilon(1e-6));
  }
  SUBCASE("delay is pure phase") {
    const double f = 3.0;
    const auto without = h_q_response(p, g, 0.0, f);
    const auto with = h_q_response(p, g, 0.0075, f);
    CHECK(std::abs(with) == doctest::Approx(std::abs(without)));
    CHECK(std::arg(with) - std::arg(without) ==
          doctest::Approx(-2.0 * pi * f * 0.0075));
  }
  SUBCASE("high-load locomotion-gain anchor: magnitude at 10 Hz") {
    // small residual drive damping; exact d = 0 lands at -11.5 dB
    JointParams anchor{6.28e-2, 0.45, 0.0, 0.0};
    CHECK(magnitude_db(h_q_response(anchor, g, 0.0, 10.0)) ==
          doctest::Approx(-14.0).epsilon(0.15));
    CHECK(damped_natural_frequency_hz(anchor, g) == doctest::Approx(4.35).epsilon(0.16));
  }
}

TEST_CASE("second-order identity: peak and damped frequency match the poles") {
  JointParams p{0.05, 0.3, 0.0, 0.0};
  DriveGains g{80.0, 1.5};

  const auto [s1, s2] = closed_loop_poles(p, g);
  // poles solve I s^2 + (d + D) s + P = 0
  const auto residual = p.armature_inertia * s1 * s1 +
                        (p.viscous_damping + g.d_gain) * s1 + g.p_gain;
  CHECK(std::abs(residual) < 1e-9 * g.p_gain);
  CHECK(damped_natural_frequency_hz(p, g) ==
        doctest::Approx(std::abs(s1.imag()) / (2.0 * pi)).epsilon(1e-12));

  SUBCASE("numeric peak search agrees with the closed form") {
    const double f_peak = peak_frequency_hz(p, g);
    REQUIRE(f_peak > 0.0);
    // golden-section search over |H| as an independent check
    double lo = 0.01, hi = 3.0 * f_peak;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i < 200; ++i) {
      const double a = hi - gr * (hi - lo);
      const double b = lo + gr * (hi - lo);
      if (std::abs(h_q_response(p, g, 0.0, a)) < std::abs(h_q_response(p, g, 0.0, b))) {
        lo = a;
      } else {
        hi = b;
      }
    }
    CHECK(0.5 * (lo + hi) == doctest::Approx(f_peak).epsilon(1e-6));
  }
  SUBCASE("overdamped configuration has no peak") {
    JointParams heavy{0.05, 10.0, 0.0, 0.0};
    CHECK(peak_frequency_hz(heavy, g) == 0.0);
    CHECK(damped_natural_frequency_hz(heavy, g) == 0.0);
  }
}

TEST_CASE("pmsm inner loop and bandwidth") {
  const double R = 1.04;
  const double L = 5.34e-4;

  SUBCASE("DC admittance is 1/R") {
    CHECK(std::abs(pmsm_inner_loop(R, L, 0.0)) == doctest::Approx(1.0 / R));
  }
  SUBCASE("bandwidth formula") {
    CHECK(pmsm_bandwidth(R, L) == doctest::Approx(310.0).epsilon(1e-3));
    CHECK(pmsm_bandwidth(R, 2.0 * L) == doctest::Approx(0.5 * pmsm_bandwidth(R, L)));
    CHECK(pmsm_bandwidth(2.0 * pi * L, L) == doctest::Approx(1.0));
  }
  SUBCASE("half power and -45 degrees at the corner") {
    const double f_inf = pmsm_bandwidth(R, L);
    const double rel = std::abs(pmsm_inner_loop(R, L, f_inf)) /
                       std::abs(pmsm_inner_loop(R, L, 0.0));
    CHECK(20.0 * std::log10(rel) == doctest::Approx(-10.0 * std::log10(2.0)).epsilon(1e-9));
    CHECK(std::arg(pmsm_inner_loop(R, L, f_inf)) * 180.0 / pi == doctest::Approx(-45.0));
  }
}

TEST_CASE("voltage_headroom") {
  auto motor = test::hip_motor();

  CHECK(voltage_headroom(0.0, 0.0, motor) == doctest::Approx(48.0));

  SUBCASE("zero headroom reproduces the envelope boundary") {
    const auto env = build_envelope(motor);
    // at zero_torque_speed no current fits: headroom at i = 0 vanishes
    CHECK(voltage_headroom(0.0, env.zero_torque_speed, motor) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // at the corner the full ceiling current just fits
    const double i_max = motor.max_motor_torque / motor.motor_constant;
    CHECK(voltage_headroom(i_max, env.emf_corner_speed, motor) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("affine in current and speed") {
    const double base = voltage_headroom(2.0, 10.0, motor);
    CHECK(voltage_headroom(3.0, 10.0, motor) ==
          doctest::Approx(base - motor.coil_resistance));
    CHECK(voltage_headroom(2.0, 11.0, motor) ==
          doctest::Approx(base - motor.emf_constant_or_default()));
  }
}

TEST_CASE("pendulum_inertia") {
  PendulumMeasurement thigh;
  thigh.mass = 3.775;
  thigh.com_distance = 0.30;
  thigh.eigenfrequency = 0.82;
  thigh.gravity = 9.806;
  thigh.sigma_r = 0.01;
  thigh.sigma_f = 0.03;

  SUBCASE("thigh measurement") {
    const auto res = pendulum_inertia(thigh);
    CHECK(res.i_com == doctest::Approx(0.0786).epsilon(0.005));
    CHECK(res.sigma_i_com == doctest::Approx(0.0318).epsilon(0.05));
  }
  SUBCASE("no input uncertainty, no output uncertainty") {
    auto exact = thigh;
    exact.sigma_r = 0.0;
    exact.sigma_f = 0.0;
    CHECK(pendulum_inertia(exact).sigma_i_com == 0.0);
  }
  SUBCASE("round trip through the eigenfrequency is exact") {
    // synthesize f from a known CoM inertia, then re-identify
    const double i_com = 0.0786;
    const double i_p = i_com + thigh.mass * thigh.com_distance * thigh.com_distance;
    auto synth = thigh;
    synth.eigenfrequency =
        std::sqrt(thigh.mass * thigh.com_distance * thigh.gravity / i_p) / (2.0 * pi);
    CHECK(pendulum_inertia(synth).i_com == doctest::Approx(i_com).epsilon(1e-12));
  }
  SUBCASE("first-order propagation matches Monte-Carlo within 10%") {
    const auto res = pendulum_inertia(thigh);
    test::NoiseSource noise(123);
    const int n = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      auto draw = thigh;
      draw.com_distance += noise.gaussian(thigh.sigma_r);
      draw.eigenfrequency += noise.gaussian(thigh.sigma_f);
      draw.sigma_r = draw.sigma_f = 0.0;
      const double v = pendulum_inertia(draw).i_com;
      sum += v;
      sum_sq += v * v;
    }
    const double mc_std = std::sqrt(sum_sq / n - (sum / n) * (sum / n));
    CHECK(res.sigma_i_com == doctest::Approx(mc_std).epsilon(0.10));
  }
}

namespace {

PlanarLegModel anymal_scale_leg() {
  PlanarLegModel leg;
  leg.base_mass = 52.8;
  leg.link_length = 0.3;
  leg.hip_inertia = 0.07;
  leg.knee_inertia = 0.07;
  return leg;
}

// Independent check: generic d'Alembert reduction with finite-difference
// Jacobians of the raw constraint maps z(q_k) = 2 l cos(q_k / 2) and
// q_h(q_k) = q_k / 2, with both knees actuated.
double vertical_inertia_virtual_work(const PlanarLegModel& leg, double q_k) {
  const double h = 1e-6;
  auto z = [&](double q) { return 2.0 * leg.link_length * std::cos(0.5 * q); };
  auto qh = [](double q) { return 0.5 * q; };
  const double dz = (z(q_k + h) - z(q_k - h)) / (2.0 * h);
  const double dqh = (qh(q_k + h) - qh(q_k - h)) / (2.0 * h);
  const double generalized =
      leg.base_mass * dz * dz + leg.hip_inertia * dqh * dqh + leg.knee_inertia;
  return generalized / 2.0;  // torque applied at two knees
}

}  // namespace

TEST_CASE("effective_inertia_vertical") {
  const auto leg = anymal_scale_leg();

  SUBCASE("straight leg keeps only the link terms") {
    const double floor = 0.5 * (0.25 * leg.hip_inertia + leg.knee_inertia);
    CHECK(effective_inertia_vertical(leg, 1e-9) == doctest::Approx(floor).epsilon(1e-6));
  }
  SUBCASE("agile stance value and dominance over the drive inertia") {
    const double val = effective_inertia_vertical(leg, pi / 2);
    CHECK(val == doctest::Approx(1.23).epsilon(0.005));
    CHECK(val / 0.067 >= 10.0);
  }
  SUBCASE("matches the numeric virtual-work oracle to 1e-6 relative") {
    for (double q = 0.1; q <= 3.0; q += 0.01) {
      const double closed = effective_inertia_vertical(leg, q);
      const double numeric = vertical_inertia_virtual_work(leg, q);
      CHECK(std::abs(closed - numeric) <= 1e-6 * numeric);
    }
  }
  SUBCASE("lower bound with equality only at zero angle") {
    const double floor = 0.5 * (0.25 * leg.hip_inertia + leg.knee_inertia);
    for (double q = 0.05; q < pi; q += 0.05) {
      CHECK(effective_inertia_vertical(leg, q) > floor);
    }
  }
  SUBCASE("singular stances are rejected") {
    CHECK_THROWS_AS(effective_inertia_vertical(leg, 0.0), InputError);
    CHECK_THROWS_AS(effective_inertia_vertical(leg, pi), InputError);
  }
}

TEST_CASE("effective_inertia_horizontal") {
  const auto leg = anymal_scale_leg();

  SUBCASE("constraint residual stays below 1e-9 on both branches") {
    for (int branch : {+1, -1}) {
      for (double q = -1.1; q <= 1.1; q += 0.013) {
        const auto pose = horizontal_base_pose(leg, q, branch);
        CHECK(std::abs(pose.z - std::numbers::sqrt2 * leg.link_length) < 1e-9);
      }
    }
  }
  SUBCASE("stationary base point reduces to the link terms") {
    // on the minus branch at 45 deg the base x-velocity vanishes and the
    // knee moves at twice the hip rate
    const double val = effective_inertia_horizontal(leg, pi / 4, -1);
    CHECK(val == doctest::Approx(leg.hip_inertia + 4.0 * leg.knee_inertia).epsilon(1e-6));
  }
  SUBCASE("nominal stance dominates the drive inertia") {
    const double val = effective_inertia_horizontal(leg, pi / 4, +1);
    CHECK(val == doctest::Approx(leg.base_mass * 2.0 * leg.link_length * leg.link_length +
                                 leg.hip_inertia)
                     .epsilon(1e-6));
    CHECK(val / 0.089 >= 10.0);
  }
  SUBCASE("continuous over the interior of the reachable range") {
    // a genuine discontinuity would dominate the second difference; the
    // smooth slope itself cancels out
    const double h = 1e-3;
    for (double q = -1.0 + h; q <= 1.0 - h; q += h) {
      const double lo = effective_inertia_horizontal(leg, q - h, +1);
      const double mid = effective_inertia_horizontal(leg, q, +1);
      const double hi = effective_inertia_horizontal(leg, q + h, +1);
      CHECK(std::abs(hi - 2.0 * mid + lo) <= 0.01 * std::max(1.0, std::abs(mid)));
    }
  }
  SUBCASE("unreachable hip angles are rejected") {
    CHECK_THROWS_AS(effective_inertia_horizontal(leg, 1.5, +1), InputError);
  }
}

TEST_CASE("reduced_inertia_sum") {
  SUBCASE("drive stack reflected to the output") {
    const std::array<ReducedComponent, 4> parts = {
        ReducedComponent{1.14e-2, 1.0}, ReducedComponent{0.511e-2, 1.0},
        ReducedComponent{0.00203e-2, 1.0}, ReducedComponent{0.00146e-2, 1.0}};
    CHECK(reduced_inertia_sum(parts) == doctest::Approx(1.65e-2).epsilon(1e-3));
  }
  SUBCASE("single unity-ratio component is itself") {
    const std::array<ReducedComponent, 1> one = {ReducedComponent{0.42, 1.0}};
    CHECK(reduced_inertia_sum(one) == doctest::Approx(0.42));
  }
  SUBCASE("high-load lever configuration") {
    const std::array<ReducedComponent, 4> parts = {
        ReducedComponent{1.65e-2, 1.0},                          // drive stack
        ReducedComponent{8.67e-3, 1.0},                          // interface
        ReducedComponent{point_mass_inertia(0.503, 0.273), 1.0}, // lever mass
        ReducedComponent{1.8e-4, 1.0}};                          // mass about its CoM
    const double total = reduced_inertia_sum(parts);
    CHECK(total == doctest::Approx(6.27e-2).epsilon(0.005));
    CHECK(total >= 1.65e-2);
    CHECK(total <= 6.3e-2);
  }
  SUBCASE("ratio enters squared") {
    const std::array<ReducedComponent, 1> geared = {ReducedComponent{0.01, 5.6}};
    CHECK(reduced_inertia_sum(geared) == doctest::Approx(0.01 * 5.6 * 5.6));
  }
}

TEST_CASE("empirical_frf") {
  ChirpSpec spec;
  spec.f_start = 0.5;
  spec.f_end = 5.0;
  spec.duration = 60.0;
  spec.amplitude = {1.0};
  spec.center = {0.0};
  spec.sample_rate = 200.0;
  const auto stim = chirp(spec, 1);
  const double dt = stim.sample_dt();
  // keep 1.1 * f below f_end so every correlation window is symmetric
  const std::array<double, 8> grid = {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5};

  SUBCASE("identity system is 0 dB / 0 degrees") {
    const auto fr = empirical_frf(stim.targets, stim.targets, dt, spec, grid);
    for (std::size_t i = 0; i < fr.frequencies.size(); ++i) {
      CHECK(fr.magnitude_db[i] == doctest::Approx(0.0).epsilon(1e-9));
      CHECK(fr.phase_deg[i] == doctest::Approx(0.0).epsilon(1e-9));
    }
  }
  SUBCASE("pure delay shows up as linear phase") {
    const std::size_t shift = 10;  // 50 ms at 200 Hz
    std::vector<double> delayed(stim.targets.size());
    for (std::size_t k = 0; k < delayed.size(); ++k) {
      delayed[k] = k >= shift ? stim.targets[k - shift] : 0.0;
    }
    const auto fr = empirical_frf(stim.targets, delayed, dt, spec, grid);
    const double T = static_cast<double>(shift) * dt;
    for (std::size_t i = 0; i < fr.frequencies.size(); ++i) {
      // the sweep walks ~0.28 rad of extra phase across the widest window,
      // which costs the constant-phase fit a few hundredths of a dB
      CHECK(fr.magnitude_db[i] == doctest::Approx(0.0).epsilon(0.05));
      CHECK(fr.phase_deg[i] ==
            doctest::Approx(-360.0 * fr.frequencies[i] * T).epsilon(0.03));
      CHECK(std::abs(fr.phase_deg[i] - (-360.0 * fr.frequencies[i] * T)) < 2.0);
    }
  }
  SUBCASE("grid outside the sweep band is rejected") {
    const std::array<double, 1> bad = {7.0};
    CHECK_THROWS_AS(empirical_frf(stim.targets, stim.targets, dt, spec, bad), InputError);
  }
  SUBCASE("window shorter than one cycle is rejected") {
    const std::array<double, 1> low = {0.5};  // window starts at t=0, ~0.7 s
    CHECK_THROWS_AS(empirical_frf(stim.targets, stim.targets, dt, spec, low), InputError);
  }
}

TEST_CASE("empirical frf of a linear rollout matches the closed form") {
  // cross-module consistency: simulate the locomotion-gain joint and
  // compare the measured response against h_q_response
  const double inertia = 6.28e-2;
  auto model = test::single_joint_model(inertia, 0.0, 0.0, 0.0);
  SimConfig sim;

  ChirpSpec spec;
  spec.f_start = 0.15;
  spec.f_end = 5.5;
  spec.duration = 700.0;
  spec.amplitude = {0.1};
  spec.center = {0.0};
  spec.sample_rate = 1.0 / sim.control_dt;
  const auto targets = chirp(spec, 1);
  std::vector<JointState> init(1);
  const auto sim_out = rollout(model, targets, sim, init);

  std::vector<double> grid;
  for (double f = 0.2; f <= 5.0; f *= 1.26) grid.push_back(f);
  grid.push_back(5.0);
  const auto fr = empirical_frf(sim_out, sim_out, spec, grid, 0);

  for (std::size_t i = 0; i < fr.frequencies.size(); ++i) {
    const auto h = h_q_response(model.joints[0], model.gains[0], 0.0, fr.frequencies[i]);
    CHECK(std::abs(fr.magnitude_db[i] - magnitude_db(h)) < 1.0);
    double expect_phase = phase_deg(h);
    double got = fr.phase_deg[i];
    // compare on the circle
    double diff = std::fmod(got - expect_phase + 540.0, 360.0) - 180.0;
    CHECK(std::abs(diff) < 5.0);
  }
}
