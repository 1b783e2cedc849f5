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

#include <doctest.h>

#include <array>
#include <cmath>

#include "actkit/errors.hpp"
#include "test_support.hpp"

using namespace actkit;

TEST_CASE("joule_heating") {
  const std::array<MotorParams, 1> motors = {test::hip_motor()};

  SUBCASE("zero torque draws nothing") {
    const std::array<double, 1> tau = {0.0};
    CHECK(joule_heating(tau, motors) == 0.0);
  }
  SUBCASE("10 Nm through the hip drive") {
    const std::array<double, 1> tau = {10.0};
    // tau^2 R / (r k_i)^2 = 100 * 1.04 / (5.6 * 0.59)^2
    CHECK(joule_heating(tau, motors) == doctest::Approx(9.527).epsilon(1e-3));
  }
  SUBCASE("quadratic in torque and sign blind") {
    const std::array<double, 1> tau1 = {7.0};
    const std::array<double, 1> tau2 = {14.0};
    const std::array<double, 1> tau3 = {-7.0};
    CHECK(joule_heating(tau2, motors) == doctest::Approx(4.0 * joule_heating(tau1, motors)));
    CHECK(joule_heating(tau3, motors) == joule_heating(tau1, motors));
  }
  SUBCASE("length mismatch is rejected") {
    const std::array<double, 2> tau = {1.0, 2.0};
    CHECK_THROWS_AS(joule_heating(tau, motors), InputError);
  }
}

TEST_CASE("mech_power regeneration branches") {
  const std::array<double, 2> tau = {5.0, 5.0};
  const std::array<double, 2> qd_pos = {5.0, 5.0};
  const std::array<double, 2> qd_neg = {-1.0, -1.0};

  CHECK(mech_power(tau, qd_pos, 0.3) == doctest::Approx(50.0));
  CHECK(mech_power(tau, qd_neg, 0.3) == doctest::Approx(-3.0));
  CHECK(mech_power(tau, qd_neg, 0.0) == 0.0);

  SUBCASE("magnitude never exceeds the raw shaft power") {
    for (double k = 0.0; k <= 1.0; k += 0.25) {
      CHECK(std::abs(mech_power(tau, qd_neg, k)) <= 10.0 + 1e-12);
    }
  }
}

TEST_CASE("pot_power") {
  const std::array<double, 1> mass = {52.8};

  SUBCASE("still bodies") {
    const std::array<double, 1> vz = {0.0};
    CHECK(pot_power(mass, vz, 9.81) == 0.0);
  }
  SUBCASE("single body rising at 0.1 m/s") {
    const std::array<double, 1> vz = {0.1};
    CHECK(pot_power(mass, vz, 9.81) == doctest::Approx(51.8).epsilon(1e-3));
  }
  SUBCASE("sign follows the velocity") {
    const std::array<double, 1> up = {0.2};
    const std::array<double, 1> down = {-0.2};
    CHECK(pot_power(mass, up, 9.81) == -pot_power(mass, down, 9.81));
  }
}

TEST_CASE("gamma_v normalization") {
  const std::array<double, 3> zero = {0.0, 0.0, 0.0};
  const std::array<double, 3> unit = {1.0, 0.0, 0.0};
  const std::array<double, 3> three = {3.0, 0.0, 0.0};
  CHECK(gamma_v(zero) == 1.0);
  CHECK(gamma_v(unit) == doctest::Approx(0.5));
  CHECK(gamma_v(three) == doctest::Approx(0.1));

  SUBCASE("monotonically decreasing in speed") {
    double prev = 1.0;
    for (double v = 0.1; v < 4.0; v += 0.1) {
      const std::array<double, 3> cmd = {v, 0.0, 0.0};
      const double g = gamma_v(cmd);
      CHECK(g < prev);
      CHECK(g > 0.0);
      CHECK(g <= 1.0);
      prev = g;
    }
  }
}

TEST_CASE("reward_velocity") {
  const double sigma = 0.25;
  const std::array<double, 3> cmd = {1.0, 0.0, 0.2};

  SUBCASE("perfect tracking scores 2") {
    CHECK(reward_velocity(cmd, cmd, sigma) == doctest::Approx(2.0));
  }
  SUBCASE("one width of linear error") {
    const std::array<double, 3> meas = {1.0 - std::sqrt(sigma), 0.0, 0.2};
    CHECK(reward_velocity(cmd, meas, sigma) ==
          doctest::Approx(std::exp(-1.0) + 1.0));
  }
  SUBCASE("symmetric in the error sign and bounded by (0, 2]") {
    const std::array<double, 3> high = {1.3, 0.1, 0.2};
    const std::array<double, 3> low = {0.7, -0.1, 0.2};
    CHECK(reward_velocity(cmd, high, sigma) ==
          doctest::Approx(reward_velocity(cmd, low, sigma)));
    CHECK(reward_velocity(cmd, high, sigma) > 0.0);
    CHECK(reward_velocity(cmd, high, sigma) <= 2.0);
  }
}

TEST_CASE("reward_ftd") {
  const std::vector<std::vector<double>> history = {
      {0.2, 0.5, 0.3}, {0.1, 0.1, 0.9}, {0.0, 0.0, 0.0}, {0.4, 0.2, 0.1}};

  SUBCASE("no touchdowns, no penalty") {
    const std::array<bool, 4> down = {false, false, false, false};
    CHECK(reward_ftd(history, down) == 0.0);
  }
  SUBCASE("window maximum of the touching foot") {
    const std::array<bool, 4> down = {true, false, false, false};
    CHECK(reward_ftd(history, down) == doctest::Approx(0.5));
  }
  SUBCASE("simultaneous touchdowns sum their maxima") {
    const std::array<bool, 4> down = {true, true, false, false};
    CHECK(reward_ftd(history, down) == doctest::Approx(0.5 + 0.9));
  }
}

TEST_CASE("penalty_schedule") {
  const double half_life = std::log(2.0) / 500.0;
  CHECK(penalty_schedule(0.0, half_life) == 0.0);
  CHECK(penalty_schedule(500.0, half_life) == doctest::Approx(0.5));
  CHECK(penalty_schedule(1e9, half_life) == doctest::Approx(1.0));

  SUBCASE("monotone and below one") {
    double prev = -1.0;
    for (double t = 0.0; t < 5000.0; t += 100.0) {
      const double k = penalty_schedule(t, half_life);
      CHECK(k >= prev);
      CHECK(k < 1.0);
      prev = k;
    }
  }
}

TEST_CASE("entropy_schedule") {
  const double e0 = 2e-3, e_inf = 5e-4, eta = 5e-4, t_turn = 20000.0;

  CHECK(entropy_schedule(t_turn, e0, e_inf, eta, t_turn) ==
        doctest::Approx(0.5 * (e0 + e_inf)));
  CHECK(entropy_schedule(0.0, e0, e_inf, eta, t_turn) == doctest::Approx(e0).epsilon(1e-4));
  CHECK(entropy_schedule(10.0 * t_turn, e0, e_inf, eta, t_turn) ==
        doctest::Approx(e_inf).epsilon(1e-6));

  SUBCASE("strictly monotone when the endpoints differ") {
    double prev = entropy_schedule(0.0, e0, e_inf, eta, t_turn);
    for (double t = 500.0; t <= 40000.0; t += 500.0) {
      const double e = entropy_schedule(t, e0, e_inf, eta, t_turn);
      CHECK(e < prev);
      prev = e;
    }
  }
}

TEST_CASE("total_reward composition") {
  RewardWeights w;
  w.c_v = 0.2;
  w.c_e = -16e-5;
  w.c_c = -1.0;
  w.c_ftd = -0.1;
  w.decay_rate = std::log(2.0) / 500.0;

  SUBCASE("iteration zero gates energy and touchdown off") {
    RewardTerms terms{2.0, 123.0, 1.0, 0.7};
    CHECK(total_reward(terms, w, 0.0) == doctest::Approx(0.2 * 2.0 - 1.0));
  }
  SUBCASE("fully ramped, perfect tracking, no dissipation") {
    RewardTerms terms{2.0, 0.0, 0.0, 0.0};
    w.decay_rate = 1e9;  // kappa ~= 1
    CHECK(total_reward(terms, w, 1.0) == doctest::Approx(0.4));
  }
}

TEST_CASE("average_power") {
  EnergyTrial trial;
  trial.battery_capacity = 907.2;
  trial.soc_start = 0.95;
  trial.soc_end = 0.15;
  trial.duration = 82.0 * 60.0;

  CHECK(average_power(trial) == doctest::Approx(531.0).epsilon(1e-3));

  SUBCASE("no SoC change draws nothing") {
    trial.soc_end = 0.95;
    CHECK_THROWS_AS(average_power(trial), InputError);  // equal SoC is not a trial
    trial.soc_end = 0.95 - 1e-12;
    CHECK(average_power(trial) == doctest::Approx(0.0).epsilon(1e-6));
  }
  SUBCASE("doubling the duration halves the power") {
    auto longer = trial;
    longer.duration *= 2.0;
    CHECK(average_power(longer) == doctest::Approx(0.5 * average_power(trial)));
  }
}

namespace {

EnergyTrial calibration_trial(double watts, double duration = 3600.0) {
  EnergyTrial t;
  t.battery_capacity = 907.2;
  t.soc_start = 0.9;
  t.duration = duration;
  t.soc_end = t.soc_start - watts * duration / (t.battery_capacity * 3600.0);
  return t;
}

}  // namespace

TEST_CASE("cot_decompose") {
  EnergyTrial track;
  track.battery_capacity = 907.2;
  track.soc_start = 0.95;
  track.soc_end = 0.15;
  track.duration = 82.0 * 60.0;
  track.distance = 4120.0;
  track.mass = 52.8;
  track.gravity = 9.81;

  SUBCASE("equal rest and off power means the drives draw nothing") {
    const auto rest = calibration_trial(200.0);
    const auto off = calibration_trial(200.0);
    const auto b = cot_decompose(track, rest, off);
    CHECK(b.cod == 0.0);
    CHECK(b.cot == doctest::Approx(b.coe + b.cod + b.col));
  }
  SUBCASE("decomposition identity holds to machine precision") {
    const auto rest = calibration_trial(321.0);
    const auto off = calibration_trial(216.9);
    const auto b = cot_decompose(track, rest, off);
    CHECK(std::abs(b.cot - (b.coe + b.cod + b.col)) <= 4.0 * 1e-16 * std::abs(b.cot));
  }
  SUBCASE("inconsistent calibration is rejected") {
    const auto rest = calibration_trial(100.0);
    const auto off = calibration_trial(200.0);
    CHECK_THROWS_AS(cot_decompose(track, rest, off), InputError);
  }
  SUBCASE("calibration trials must not carry a distance") {
    auto rest = calibration_trial(300.0);
    rest.distance = 10.0;
    const auto off = calibration_trial(200.0);
    CHECK_THROWS_AS(cot_decompose(track, rest, off), InputError);
  }
}
