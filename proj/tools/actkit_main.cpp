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

// actkit command line: excitation generation, joint-dynamics simulation,
// parameter fitting, evaluation, frequency response and energy reports.
//
// Exit codes: 0 success, 2 input/config error, 3 numerical failure.

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "actkit/analysis.hpp"
#include "actkit/config.hpp"
#include "actkit/dynamics.hpp"
#include "actkit/energy.hpp"
#include "actkit/errors.hpp"
#include "actkit/excitation.hpp"
#include "actkit/identify.hpp"
#include "actkit/model_io.hpp"
#include "actkit/param_vector.hpp"
#include "actkit/trajectory.hpp"
#include "actkit/version.hpp"

namespace {

using actkit::Config;
using actkit::InputError;
using actkit::NumericalError;
using json = nlohmann::ordered_json;

struct GlobalOpts {
  std::optional<std::int64_t> seed;
  int jobs = 1;
  std::string out;
};

struct RunManifest {
  std::string command;
  std::vector<std::string> config_paths;
  std::vector<std::string> input_paths;
  std::string output_path;
  std::optional<std::int64_t> seed;

  json to_json() const {
    json j;
    j["command"] = command;
    j["config_paths"] = config_paths;
    j["input_paths"] = input_paths;
    j["output_path"] = output_path;
    if (seed) {
      j["seed"] = *seed;
    } else {
      j["seed"] = nullptr;
    }
    j["tool_version"] = actkit::kVersion;
    return j;
  }
};

void check_readable(const std::vector<std::string>& paths) {
  for (const auto& p : paths) {
    if (!std::filesystem::exists(p)) throw InputError("no such file: " + p);
  }
}

// outputs land via temp file + rename so a failed run never leaves a
// truncated artifact behind
void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write output file: " + tmp.string());
    out << content;
    if (!out.good()) throw InputError("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_json(const std::string& path, const json& j) {
  atomic_write(path, j.dump(2) + "\n");
}

std::string require_out(const GlobalOpts& g, const std::string& local) {
  if (!local.empty()) return local;
  if (!g.out.empty()) return g.out;
  throw InputError("missing output path (use --out)");
}

// companion CSV next to a JSON result: fit.json -> fit_trace.csv
std::string companion_csv_path(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  p.replace_extension();
  return p.string() + suffix + ".csv";
}

actkit::SimConfig sim_from_model_config(Config& cfg) { return actkit::load_sim_config(cfg); }

int cmd_gen_excite(const GlobalOpts& g, const std::string& kind,
                   const std::string& spec_path, const std::string& model_path,
                   const std::string& out_path) {
  check_readable({spec_path});
  if (!model_path.empty()) check_readable({model_path});

  Config spec_cfg = Config::parse_file(spec_path);
  int n_joints = 0;
  if (!model_path.empty()) {
    Config model_cfg = Config::parse_file(model_path);
    const auto model = actkit::load_robot_model(model_cfg);
    actkit::load_sim_config(model_cfg);
    model_cfg.finish();
    n_joints = model.n_joints;
  } else {
    n_joints = static_cast<int>(spec_cfg.get_integer("n_joints"));
  }

  actkit::Trajectory traj;
  std::optional<std::int64_t> used_seed = g.seed;
  if (kind == "chirp") {
    std::vector<double> offsets;
    if (auto v = spec_cfg.get_per_joint_optional("phase_offsets", n_joints)) offsets = *v;
    if (spec_cfg.has("n_joints") && !model_path.empty()) {
      spec_cfg.get_integer("n_joints");  // consumed; model wins but must agree
    }
    const auto spec = actkit::load_chirp_spec(spec_cfg);
    spec_cfg.finish();
    traj = actkit::chirp(spec, n_joints, offsets);
  } else if (kind == "steps") {
    if (spec_cfg.has("n_joints") && !model_path.empty()) spec_cfg.get_integer("n_joints");
    auto spec = actkit::load_step_spec(spec_cfg);
    spec_cfg.finish();
    if (g.seed) spec.seed = static_cast<std::uint64_t>(*g.seed);
    used_seed = static_cast<std::int64_t>(spec.seed);
    traj = actkit::random_steps(spec, n_joints);
  } else {
    throw InputError("unknown excitation kind '" + kind + "' (chirp or steps)");
  }

  RunManifest manifest;
  manifest.command = "gen-excite";
  manifest.config_paths = {spec_path};
  if (!model_path.empty()) manifest.config_paths.push_back(model_path);
  manifest.output_path = out_path;
  manifest.seed = used_seed;

  std::ostringstream body;
  actkit::write_trajectory_csv(body, traj, "manifest: " + manifest.to_json().dump());
  atomic_write(out_path, body.str());
  return 0;
}

int cmd_simulate(const GlobalOpts& g, const std::string& model_path,
                 const std::string& data_path, const std::string& out_path) {
  check_readable({model_path, data_path});
  Config model_cfg = Config::parse_file(model_path);
  const auto model = actkit::load_robot_model(model_cfg);
  const auto sim = sim_from_model_config(model_cfg);
  model_cfg.finish();

  const auto data = actkit::read_trajectory_csv(data_path);
  const auto result = actkit::rollout(model, data, sim);

  RunManifest manifest;
  manifest.command = "simulate";
  manifest.config_paths = {model_path};
  manifest.input_paths = {data_path};
  manifest.output_path = out_path;
  manifest.seed = g.seed;

  std::ostringstream body;
  actkit::write_trajectory_csv(body, result, "manifest: " + manifest.to_json().dump());
  atomic_write(out_path, body.str());
  return 0;
}

json param_vector_json(const actkit::ParamVector& p) {
  json j;
  auto column = [&](auto getter) {
    std::vector<double> v(static_cast<std::size_t>(p.n_joints));
    for (int i = 0; i < p.n_joints; ++i) v[static_cast<std::size_t>(i)] = getter(i);
    return v;
  };
  j["armature_inertia"] = column([&](int i) { return p.armature(i); });
  j["viscous_damping"] = column([&](int i) { return p.damping(i); });
  j["coulomb_friction"] = column([&](int i) { return p.friction(i); });
  j["joint_bias"] = column([&](int i) { return p.bias(i); });
  j["command_delay"] = p.delay();
  return j;
}

int cmd_fit(const GlobalOpts& g, const std::string& model_path,
            const std::vector<std::string>& data_paths, const std::string& bounds_path,
            const std::string& fit_path, const std::string& out_path) {
  check_readable({model_path});
  check_readable(data_paths);
  if (data_paths.empty()) throw InputError("fit needs at least one --data file");

  Config model_cfg = Config::parse_file(model_path);
  const auto base = actkit::load_robot_model(model_cfg);
  const auto sim = sim_from_model_config(model_cfg);
  model_cfg.finish();

  actkit::FitConfig fit;
  if (!fit_path.empty()) {
    check_readable({fit_path});
    Config fit_cfg = Config::parse_file(fit_path);
    fit = actkit::load_fit_config(fit_cfg);
    fit_cfg.finish();
  }
  if (g.seed) fit.seed = static_cast<std::uint64_t>(*g.seed);
  fit.jobs = g.jobs;

  actkit::ParamBounds bounds = actkit::default_bounds(base.n_joints);
  if (!bounds_path.empty()) {
    check_readable({bounds_path});
    Config bounds_cfg = Config::parse_file(bounds_path);
    bounds = actkit::load_param_bounds(bounds_cfg, base.n_joints);
    bounds_cfg.finish();
  }

  std::vector<actkit::Trajectory> data;
  data.reserve(data_paths.size());
  for (const auto& p : data_paths) data.push_back(actkit::read_trajectory_csv(p));

  const auto result = actkit::cma_es_fit(base, data, bounds, fit, sim);

  const std::string trace_path = companion_csv_path(out_path, "_trace");
  RunManifest manifest;
  manifest.command = "fit";
  manifest.config_paths = {model_path};
  if (!bounds_path.empty()) manifest.config_paths.push_back(bounds_path);
  if (!fit_path.empty()) manifest.config_paths.push_back(fit_path);
  manifest.input_paths = data_paths;
  manifest.output_path = out_path;
  manifest.seed = static_cast<std::int64_t>(fit.seed);

  json j;
  j["manifest"] = manifest.to_json();
  j["model"] = base.name;
  j["n_joints"] = base.n_joints;
  j["best_loss"] = result.best_loss;
  j["iterations"] = result.iterations;
  j["evaluations"] = result.evaluations;
  j["converged"] = result.converged;
  j["parameters"] = param_vector_json(result.best_params);
  j["trace_csv"] = trace_path;
  write_json(out_path, j);

  std::ostringstream trace;
  trace << "# manifest: " << manifest.to_json().dump() << "\n";
  trace << "iteration,best_loss\n";
  trace << std::setprecision(17);
  for (std::size_t i = 0; i < result.score_trace.size(); ++i) {
    trace << i << ',' << result.score_trace[i] << "\n";
  }
  atomic_write(trace_path, trace.str());

  std::cout << "fit: best loss " << result.best_loss << " rad^2 after "
            << result.iterations << " iterations ("
            << (result.converged ? "converged" : "iteration limit") << ")\n";
  return 0;
}

int cmd_evaluate(const GlobalOpts& g, const std::string& model_path,
                 const std::string& data_path, const std::string& out_path) {
  check_readable({model_path, data_path});
  Config model_cfg = Config::parse_file(model_path);
  const auto model = actkit::load_robot_model(model_cfg);
  const auto sim = sim_from_model_config(model_cfg);
  model_cfg.finish();

  const auto data = actkit::read_trajectory_csv(data_path);
  if (data.n_joints != model.n_joints) {
    throw InputError("data has " + std::to_string(data.n_joints) + " joints, model has " +
                     std::to_string(model.n_joints));
  }
  const auto simulated = actkit::rollout(model, data, sim);
  const double fit_loss = actkit::loss(data, simulated);
  const auto metrics = actkit::delta_phase_metrics(data, simulated);

  const std::string delta_path = companion_csv_path(out_path, "_delta");
  RunManifest manifest;
  manifest.command = "evaluate";
  manifest.config_paths = {model_path};
  manifest.input_paths = {data_path};
  manifest.output_path = out_path;
  manifest.seed = g.seed;

  json j;
  j["manifest"] = manifest.to_json();
  j["model"] = model.name;
  j["n_joints"] = model.n_joints;
  j["loss"] = fit_loss;
  j["mean_dq"] = metrics.mean_dq;
  j["rms_dq"] = metrics.rms_dq;
  j["rms_dqd"] = metrics.rms_dqd;
  j["delta_csv"] = delta_path;
  write_json(out_path, j);

  std::ostringstream delta;
  delta << "# manifest: " << manifest.to_json().dump() << "\n";
  delta << "t";
  for (int jj = 0; jj < model.n_joints; ++jj) delta << ",dq" << jj;
  for (int jj = 0; jj < model.n_joints; ++jj) delta << ",dqd" << jj;
  delta << "\n" << std::setprecision(17);
  for (std::size_t k = 0; k < data.samples(); ++k) {
    delta << data.time[k];
    for (int jj = 0; jj < model.n_joints; ++jj) {
      delta << ',' << simulated.position(k, jj) - data.position(k, jj);
    }
    for (int jj = 0; jj < model.n_joints; ++jj) {
      delta << ',' << simulated.velocity(k, jj) - data.velocity(k, jj);
    }
    delta << "\n";
  }
  atomic_write(delta_path, delta.str());
  return 0;
}

int cmd_bode(const GlobalOpts& g, const std::string& model_path, int joint,
             double f_start, double f_end, int points, bool log_spacing,
             const std::string& out_path) {
  check_readable({model_path});
  Config model_cfg = Config::parse_file(model_path);
  const auto model = actkit::load_robot_model(model_cfg);
  actkit::load_sim_config(model_cfg);
  model_cfg.finish();
  if (joint < 0 || joint >= model.n_joints) throw InputError("joint index out of range");
  if (!(f_start > 0) || !(f_end > f_start)) throw InputError("need 0 < f-start < f-end");
  if (points < 2) throw InputError("need at least 2 grid points");

  const auto& params = model.joints[static_cast<std::size_t>(joint)];
  const auto& gains = model.gains[static_cast<std::size_t>(joint)];

  RunManifest manifest;
  manifest.command = "bode";
  manifest.config_paths = {model_path};
  manifest.output_path = out_path;
  manifest.seed = g.seed;

  std::ostringstream body;
  body << "# manifest: " << manifest.to_json().dump() << "\n";
  body << "f_hz,mag_db,phase_deg\n" << std::setprecision(17);
  double prev_phase = 0.0;
  for (int i = 0; i < points; ++i) {
    const double a = static_cast<double>(i) / (points - 1);
    const double f = log_spacing ? f_start * std::pow(f_end / f_start, a)
                                 : f_start + a * (f_end - f_start);
    const auto h = actkit::h_q_response(params, gains, model.command_delay, f);
    double phase = actkit::phase_deg(h);
    if (i > 0) {
      while (phase - prev_phase > 180.0) phase -= 360.0;
      while (phase - prev_phase < -180.0) phase += 360.0;
    }
    prev_phase = phase;
    body << f << ',' << actkit::magnitude_db(h) << ',' << phase << "\n";
  }
  atomic_write(out_path, body.str());
  return 0;
}

int cmd_energy_report(const GlobalOpts& g, const std::string& model_path,
                      const std::string& data_path, const std::string& out_path) {
  check_readable({model_path, data_path});
  Config model_cfg = Config::parse_file(model_path);
  const auto model = actkit::load_robot_model(model_cfg);
  actkit::load_sim_config(model_cfg);
  model_cfg.finish();
  if (model.motors.empty()) {
    throw InputError("energy report needs motor parameters in the model config");
  }
  const auto data = actkit::read_trajectory_csv(data_path);
  if (data.n_joints != model.n_joints) throw InputError("joint count mismatch");
  if (data.torques.empty()) {
    throw InputError("energy report needs tau columns in the trajectory");
  }
  const double k_regen = model.motors[0].regen_coefficient;
  for (const auto& m : model.motors) {
    if (m.regen_coefficient != k_regen) {
      throw InputError("energy report expects a uniform regen_coefficient");
    }
  }

  RunManifest manifest;
  manifest.command = "energy-report";
  manifest.config_paths = {model_path};
  manifest.input_paths = {data_path};
  manifest.output_path = out_path;
  manifest.seed = g.seed;

  std::ostringstream body;
  body << "# manifest: " << manifest.to_json().dump() << "\n";
  // potential power needs body CoM velocities, which joint logs do not
  // carry; the column is kept (as zero) so downstream totals line up
  body << "t,p_electrical,p_mechanical,p_potential,p_total\n" << std::setprecision(17);
  const auto n = static_cast<std::size_t>(model.n_joints);
  for (std::size_t k = 0; k < data.samples(); ++k) {
    std::span<const double> tau(&data.torques[k * n], n);
    std::span<const double> qd(&data.velocities[k * n], n);
    const auto p = actkit::power_breakdown(tau, qd, model.motors, k_regen, 0.0);
    body << data.time[k] << ',' << p.p_electrical << ',' << p.p_mechanical << ','
         << p.p_potential << ',' << p.p_total << "\n";
  }
  atomic_write(out_path, body.str());
  return 0;
}

int cmd_cot(const GlobalOpts& g, const std::string& track_path,
            const std::string& rest_path, const std::string& off_path,
            const std::string& out_path) {
  check_readable({track_path, rest_path, off_path});
  Config track_cfg = Config::parse_file(track_path);
  Config rest_cfg = Config::parse_file(rest_path);
  Config off_cfg = Config::parse_file(off_path);
  const auto track = actkit::load_energy_trial(track_cfg);
  const auto rest = actkit::load_energy_trial(rest_cfg);
  const auto off = actkit::load_energy_trial(off_cfg);
  track_cfg.finish();
  rest_cfg.finish();
  off_cfg.finish();

  const auto breakdown = actkit::cot_decompose(track, rest, off);

  RunManifest manifest;
  manifest.command = "cot";
  manifest.config_paths = {track_path, rest_path, off_path};
  manifest.output_path = out_path;
  manifest.seed = g.seed;

  json j;
  j["manifest"] = manifest.to_json();
  j["cot"] = breakdown.cot;
  j["coe"] = breakdown.coe;
  j["cod"] = breakdown.cod;
  j["col"] = breakdown.col;
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) write_json(out_path, j);
  return 0;
}

int cmd_inertia(const GlobalOpts& g, const std::string& mode,
                const std::string& config_path, const std::string& out_path) {
  check_readable({config_path});
  Config cfg = Config::parse_file(config_path);

  RunManifest manifest;
  manifest.command = "inertia " + mode;
  manifest.config_paths = {config_path};
  manifest.output_path = out_path;
  manifest.seed = g.seed;

  json j;
  j["manifest"] = manifest.to_json();
  if (mode == "pendulum") {
    const auto meas = actkit::load_pendulum_measurement(cfg);
    cfg.finish();
    const auto inertia = actkit::pendulum_inertia(meas);
    j["i_pivot"] = inertia.i_pivot;
    j["i_com"] = inertia.i_com;
    j["sigma_i_com"] = inertia.sigma_i_com;
  } else if (mode == "vertical") {
    const double knee_angle = cfg.get_number("knee_angle");
    const auto leg = actkit::load_planar_leg(cfg);
    cfg.finish();
    j["knee_angle"] = knee_angle;
    j["inertia"] = actkit::effective_inertia_vertical(leg, knee_angle);
  } else if (mode == "horizontal") {
    const double hip_angle = cfg.get_number("hip_angle");
    const int branch = static_cast<int>(cfg.get_integer("branch", 1));
    const auto leg = actkit::load_planar_leg(cfg);
    cfg.finish();
    const auto pose = actkit::horizontal_base_pose(leg, hip_angle, branch);
    j["hip_angle"] = hip_angle;
    j["branch"] = branch;
    j["knee_angle"] = actkit::horizontal_knee_angle(hip_angle, branch);
    j["base_x"] = pose.x;
    j["base_z"] = pose.z;
    j["inertia"] = actkit::effective_inertia_horizontal(leg, hip_angle, branch);
  } else if (mode == "reduce") {
    const auto components = actkit::load_reduced_components(cfg);
    cfg.finish();
    j["inertia"] = actkit::reduced_inertia_sum(components);
  } else {
    throw InputError("unknown inertia mode '" + mode +
                     "' (pendulum, vertical, horizontal, reduce)");
  }
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) write_json(out_path, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "actkit - PD-joint dynamics simulation, parameter identification and "
      "energy analysis."};
  app.require_subcommand(1);
  app.set_version_flag("--version", actkit::kVersion);
  const std::string exit_codes =
      "Exit codes: 0 success, 2 input error, 3 numerical failure.";
  app.footer(exit_codes);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "Seed override for seeded commands");
  app.add_option("--jobs", g.jobs, "Worker threads for population evaluation")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output path (fallback for subcommand --out)");

  std::string kind, spec_path, model_path, data_path, out_path, bounds_path, fit_path;
  std::string track_path, rest_path, off_path, inertia_config;
  std::vector<std::string> data_paths;
  int joint = 0;
  double f_start = 0.1, f_end = 50.0;
  int points = 200;
  bool log_spacing = false;

  auto* gen = app.add_subcommand("gen-excite", "Generate excitation targets (CSV)");
  gen->add_option("--kind", kind, "chirp or steps")->required();
  gen->add_option("--spec", spec_path, "Excitation spec config")->required();
  gen->add_option("--model", model_path, "Robot model config (for joint count)");
  gen->add_option("--out", out_path, "Output CSV path");

  auto* sim_cmd = app.add_subcommand("simulate", "Replay targets through the model");
  sim_cmd->add_option("--model", model_path, "Robot model config")->required();
  sim_cmd->add_option("--data", data_path, "Trajectory CSV with targets")->required();
  sim_cmd->add_option("--out", out_path, "Output CSV path");

  auto* fit_cmd = app.add_subcommand("fit", "Fit joint parameters to recorded data");
  fit_cmd->add_option("--model", model_path, "Robot model config")->required();
  fit_cmd->add_option("--data", data_paths, "Recorded trajectory CSV(s)")->required();
  fit_cmd->add_option("--bounds", bounds_path, "Parameter bounds config");
  fit_cmd->add_option("--fit", fit_path, "Fit settings config");
  fit_cmd->add_option("--out", out_path, "Result JSON path");

  auto* eval_cmd = app.add_subcommand("evaluate", "Score a model against recorded data");
  eval_cmd->add_option("--model", model_path, "Robot model config")->required();
  eval_cmd->add_option("--data", data_path, "Recorded trajectory CSV")->required();
  eval_cmd->add_option("--out", out_path, "Metrics JSON path");

  auto* bode_cmd = app.add_subcommand("bode", "Closed-loop frequency response (CSV)");
  bode_cmd->add_option("--model", model_path, "Robot model config")->required();
  bode_cmd->add_option("--joint", joint, "Joint index (default 0)");
  bode_cmd->add_option("--f-start", f_start, "Grid start [Hz]");
  bode_cmd->add_option("--f-end", f_end, "Grid end [Hz]");
  bode_cmd->add_option("--points", points, "Grid size");
  bode_cmd->add_flag("--log", log_spacing, "Logarithmic grid spacing");
  bode_cmd->add_option("--out", out_path, "Output CSV path");

  auto* energy_cmd = app.add_subcommand("energy-report", "Per-step power breakdown (CSV)");
  energy_cmd->add_option("--model", model_path, "Robot model config with motors")->required();
  energy_cmd->add_option("--data", data_path, "Trajectory CSV with tau columns")->required();
  energy_cmd->add_option("--out", out_path, "Output CSV path");

  auto* cot_cmd = app.add_subcommand("cot", "Cost-of-transport decomposition (JSON)");
  cot_cmd->add_option("--track", track_path, "Locomotion trial config")->required();
  cot_cmd->add_option("--rest", rest_path, "Drives-idle trial config")->required();
  cot_cmd->add_option("--off", off_path, "Drives-off trial config")->required();
  cot_cmd->add_option("--out", out_path, "Optional JSON output path");

  auto* inertia_cmd = app.add_subcommand("inertia", "Inertia estimation helpers (JSON)");
  inertia_cmd->add_option("mode", kind, "pendulum, vertical, horizontal or reduce")
      ->required();
  inertia_cmd->add_option("--config", inertia_config, "Input config")->required();
  inertia_cmd->add_option("--out", out_path, "Optional JSON output path");

  for (auto* sub : app.get_subcommands({})) sub->footer(exit_codes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen_excite(g, kind, spec_path, model_path, require_out(g, out_path));
    }
    if (sim_cmd->parsed()) {
      return cmd_simulate(g, model_path, data_path, require_out(g, out_path));
    }
    if (fit_cmd->parsed()) {
      return cmd_fit(g, model_path, data_paths, bounds_path, fit_path,
                     require_out(g, out_path));
    }
    if (eval_cmd->parsed()) {
      return cmd_evaluate(g, model_path, data_path, require_out(g, out_path));
    }
    if (bode_cmd->parsed()) {
      return cmd_bode(g, model_path, joint, f_start, f_end, points, log_spacing,
                      require_out(g, out_path));
    }
    if (energy_cmd->parsed()) {
      return cmd_energy_report(g, model_path, data_path, require_out(g, out_path));
    }
    if (cot_cmd->parsed()) {
      return cmd_cot(g, track_path, rest_path, off_path,
                     out_path.empty() ? g.out : out_path);
    }
    if (inertia_cmd->parsed()) {
      return cmd_inertia(g, kind, inertia_config, out_path.empty() ? g.out : out_path);
    }
    throw InputError("no subcommand given");
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
