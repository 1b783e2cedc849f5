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

#include "actkit/config.hpp"

#include <doctest.h>

#include <sstream>

#include "actkit/errors.hpp"
#include "actkit/excitation.hpp"
#include "actkit/model_io.hpp"
#include "actkit/trajectory.hpp"

using namespace actkit;

namespace {

Config parse_text(const std::string& text) {
  std::istringstream in(text);
  return Config::parse(in, "<test>");
}

}  // namespace

TEST_CASE("config parsing") {
  SUBCASE("numbers, lists, strings and comments") {
    auto cfg = parse_text(
        "schema = 1\n"
        "# a comment\n"
        "alpha = 2.5   # trailing comment\n"
        "name = bench\n"
        "values = [1, 2.5, -3e-2]\n");
    CHECK(cfg.get_number("alpha") == 2.5);
    CHECK(cfg.get_string("name") == "bench");
    const auto v = cfg.get_list("values");
    REQUIRE(v.size() == 3);
    CHECK(v[2] == doctest::Approx(-0.03));
    cfg.finish();
  }
  SUBCASE("missing schema is fatal") {
    CHECK_THROWS_AS(parse_text("alpha = 1\n"), InputError);
  }
  SUBCASE("unsupported schema is fatal") {
    CHECK_THROWS_AS(parse_text("schema = 2\nalpha = 1\n"), InputError);
  }
  SUBCASE("duplicate keys are fatal with the line number") {
    try {
      parse_text("schema = 1\nx = 1\nx = 2\n");
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(":3") != std::string::npos);
    }
  }
  SUBCASE("unknown keys are reported by finish with their line") {
    auto cfg = parse_text("schema = 1\nalpha = 1\nalhpa_typo = 2\n");
    cfg.get_number("alpha");
    try {
      cfg.finish();
      FAIL("expected InputError");
    } catch (const InputError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("alhpa_typo") != std::string::npos);
      CHECK(msg.find("line 3") != std::string::npos);
    }
  }
  SUBCASE("scalar broadcast and exact-length per-joint lists") {
    auto cfg = parse_text("schema = 1\na = 2\nb = [1, 2, 3]\n");
    CHECK(cfg.get_per_joint("a", 3) == std::vector<double>{2, 2, 2});
    CHECK(cfg.get_per_joint("b", 3) == std::vector<double>{1, 2, 3});
    CHECK_THROWS_AS(cfg.get_per_joint("b", 4), InputError);
  }
  SUBCASE("malformed line reports its location") {
    try {
      parse_text("schema = 1\njust words\n");
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
  }
}

TEST_CASE("robot model loading") {
  const std::string text =
      "schema = 1\n"
      "kind = robot_model\n"
      "name = bench\n"
      "n_joints = 2\n"
      "armature_inertia = [0.14, 0.0033]\n"
      "viscous_damping = [1.7, 2.1]\n"
      "coulomb_friction = [0.0093, 0.00025]\n"
      "joint_bias = [0.0017, -0.028]\n"
      "p_gain = 60\n"
      "d_gain = 2\n"
      "command_delay = 0.0075\n";

  SUBCASE("round trip of the dynamic parameters") {
    auto cfg = parse_text(text);
    const auto m = load_robot_model(cfg);
    cfg.finish();
    CHECK(m.n_joints == 2);
    CHECK(m.joints[1].armature_inertia == 0.0033);
    CHECK(m.gains[0].p_gain == 60.0);
    CHECK(m.command_delay == 0.0075);
    CHECK(m.motors.empty());
    CHECK(m.limits.empty());
  }
  SUBCASE("motor block") {
    auto cfg = parse_text(text +
                          "gear_ratio = 5.6\n"
                          "motor_constant = 0.59\n"
                          "coil_resistance = 1.04\n"
                          "max_motor_torque = 25\n"
                          "max_motor_speed = 94\n"
                          "bus_voltage = 48\n"
                          "regen_coefficient = 0.3\n");
    const auto m = load_robot_model(cfg);
    cfg.finish();
    REQUIRE(m.motors.size() == 2);
    CHECK(m.motors[1].bus_voltage == 48.0);
    CHECK_FALSE(m.motors[1].back_emf_constant.has_value());
    CHECK(m.motors[1].emf_constant_or_default() == 0.59);
  }
  SUBCASE("invalid parameter values are rejected") {
    auto cfg = parse_text(
        "schema = 1\nn_joints = 1\narmature_inertia = 0\nviscous_damping = 0\n"
        "coulomb_friction = 0\njoint_bias = 0\np_gain = 60\nd_gain = 2\n");
    CHECK_THROWS_AS(load_robot_model(cfg), InputError);
  }
  SUBCASE("kind mismatch is rejected") {
    auto cfg = parse_text("schema = 1\nkind = trial\nn_joints = 1\n");
    CHECK_THROWS_AS(load_robot_model(cfg), InputError);
  }
}

TEST_CASE("trajectory csv round trip") {
  ChirpSpec spec;
  spec.f_start = 0.5;
  spec.f_end = 4.0;
  spec.duration = 2.0;
  spec.amplitude = {0.3, 0.2};
  spec.center = {0.0, 0.1};
  spec.sample_rate = 100.0;
  auto t = chirp(spec, 2);
  t.positions.assign(t.targets.size(), 0.25);
  t.velocities.assign(t.targets.size(), -1.5);
  t.torques.assign(t.targets.size(), 3.25);

  std::ostringstream out;
  write_trajectory_csv(out, t, "manifest: {}");
  std::istringstream in(out.str());
  const auto back = read_trajectory_csv(in, "<mem>");

  CHECK(back.n_joints == 2);
  CHECK(back.samples() == t.samples());
  CHECK(back.targets == t.targets);  // 17 significant digits round-trip
  CHECK(back.positions == t.positions);
  CHECK(back.torques == t.torques);
  CHECK(back.sample_dt() == doctest::Approx(0.01));
}

TEST_CASE("trajectory csv rejects malformed input") {
  SUBCASE("bad header") {
    std::istringstream in("time,q0\n0,1\n");
    CHECK_THROWS_AS(read_trajectory_csv(in, "<mem>"), InputError);
  }
  SUBCASE("ragged row") {
    std::istringstream in("t,q0,qd0,target0\n0,1,2\n");
    CHECK_THROWS_AS(read_trajectory_csv(in, "<mem>"), InputError);
  }
  SUBCASE("non-numeric field") {
    std::istringstream in("t,q0,qd0,target0\n0,1,abc,3\n0.01,1,2,3\n");
    CHECK_THROWS_AS(read_trajectory_csv(in, "<mem>"), InputError);
  }
  SUBCASE("non-uniform time") {
    std::istringstream in("t,q0,qd0,target0\n0,0,0,0\n0.01,0,0,0\n0.03,0,0,0\n");
    CHECK_THROWS_AS(read_trajectory_csv(in, "<mem>"), InputError);
  }
}

TEST_CASE("bounds and trial loaders") {
  SUBCASE("bounds override a subset of entries") {
    auto cfg = parse_text(
        "schema = 1\nkind = bounds\n"
        "armature_inertia_lower = 1e-4\n"
        "armature_inertia_upper = [0.5, 0.5]\n"
        "command_delay_upper = 0.02\n");
    const auto b = load_param_bounds(cfg, 2);
    cfg.finish();
    CHECK(b.lower[0] == 1e-4);
    CHECK(b.upper[1] == 0.5);
    CHECK(b.upper[8] == 0.02);
    CHECK(b.lower[2] == 0.0);  // damping keeps the default
  }
  SUBCASE("trial loader validates the SoC window") {
    auto cfg = parse_text(
        "schema = 1\nkind = trial\nbattery_capacity = 907.2\n"
        "soc_start = 0.1\nsoc_end = 0.9\nduration = 100\n");
    CHECK_THROWS_AS(load_energy_trial(cfg), InputError);
  }
  SUBCASE("reward weights default to the locomotion set") {
    auto cfg = parse_text("schema = 1\nkind = rewards\nsigma_v = 0.25\n");
    const auto w = load_reward_weights(cfg);
    cfg.finish();
    CHECK(w.c_v == 0.2);
    CHECK(w.c_e == -16e-5);
    CHECK(w.c_c == -1.0);
    CHECK(w.c_ftd == -0.1);
    CHECK(w.ftd_buffer == 3);
  }
  SUBCASE("only the semi-implicit integrator exists") {
    auto cfg = parse_text("schema = 1\nintegrator = semi-implicit-euler\n");
    CHECK(load_sim_config(cfg).substeps() == 10);
    auto bad = parse_text("schema = 1\nintegrator = rk4\n");
    CHECK_THROWS_AS(load_sim_config(bad), InputError);
  }
}
