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

#include "actkit/identify.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "actkit/cma_es.hpp"
#include "actkit/dynamics.hpp"
#include "actkit/errors.hpp"

namespace actkit {

namespace {

void check_aligned(const Trajectory& real, const Trajectory& sim) {
  if (real.n_joints != sim.n_joints) {
    throw InputError("trajectories have different joint counts");
  }
  if (real.samples() != sim.samples()) {
    throw InputError("trajectories have different lengths");
  }
  for (std::size_t k = 0; k < real.time.size(); ++k) {
    if (std::abs(real.time[k] - sim.time[k]) > 1e-9) {
      throw InputError("trajectories are not sampled at the same instants");
    }
  }
}

std::vector<JointState> initial_states_from(const Trajectory& data) {
  std::vector<JointState> init(static_cast<std::size_t>(data.n_joints));
  for (int j = 0; j < data.n_joints; ++j) {
    auto& s = init[static_cast<std::size_t>(j)];
    s.position = data.position(0, j);
    s.velocity = data.velocities.empty() ? 0.0 : data.velocity(0, j);
    s.filtered_velocity = s.velocity;
  }
  return init;
}

}  // namespace

void validate(const FitConfig& cfg) {
  if (cfg.population_size < 4) throw InputError("population_size must be >= 4");
  if (cfg.max_iterations < 1) throw InputError("max_iterations must be >= 1");
  if (!(cfg.initial_sigma > 0) || cfg.initial_sigma > 1.0) {
    throw InputError("initial_sigma must lie in (0, 1]");
  }
  if (cfg.jobs < 1) throw InputError("jobs must be >= 1");
}

double loss(const Trajectory& real, const Trajectory& sim) {
  check_aligned(real, sim);
  if (real.positions.empty() || sim.positions.empty()) {
    throw InputError("loss needs positions on both trajectories");
  }
  const std::size_t k = real.samples();
  const std::size_t total = real.positions.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const double e = real.positions[i] - sim.positions[i];
    acc += e * e;
  }
  return acc / static_cast<double>(k);
}

std::vector<double> evaluate_population(const RobotModel& base,
                                        std::span<const ParamVector> population,
                                        const Trajectory& data, const SimConfig& sim,
                                        int jobs,
                                        std::vector<std::string>* diagnostics) {
  if (population.empty()) throw InputError("population is empty");
  validate(data);
  validate(sim);
  if (data.positions.empty()) {
    throw InputError("identification data carries no measured positions");
  }
  if (data.n_joints != base.n_joints) {
    throw InputError("data joint count does not match model");
  }
  const std::size_t count = population.size();
  std::vector<double> losses(count, std::numeric_limits<double>::infinity());
  if (diagnostics) diagnostics->assign(count, std::string{});

  const auto initial = initial_states_from(data);
  const std::size_t k = data.samples();
  const std::size_t total = data.positions.size();

  auto eval_one = [&](std::size_t e) {
    try {
      RobotModel model = base;
      population[e].apply_to(model);
      validate(model);
      const Trajectory rolled = detail::rollout_prevalidated(model, data, sim, initial);
      double acc = 0.0;
      for (std::size_t i = 0; i < total; ++i) {
        const double err = data.positions[i] - rolled.positions[i];
        acc += err * err;
      }
      losses[e] = acc / static_cast<double>(k);
    } catch (const std::exception& ex) {
      losses[e] = std::numeric_limits<double>::infinity();
      if (diagnostics) (*diagnostics)[e] = ex.what();
    }
  };

  const int workers = std::min<int>(jobs, static_cast<int>(count));
  if (workers <= 1) {
    for (std::size_t e = 0; e < count; ++e) eval_one(e);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t e = next.fetch_add(1); e < count; e = next.fetch_add(1)) {
          eval_one(e);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return losses;
}

FitResult cma_es_fit(const RobotModel& base, std::span<const Trajectory> data,
                     const ParamBounds& bounds, const FitConfig& cfg,
                     const SimConfig& sim) {
  validate(base);
  validate(cfg);
  validate(sim);
  validate(bounds, base.n_joints);
  if (data.empty()) throw InputError("no identification data");
  for (const auto& seq : data) {
    validate(seq);
    if (seq.n_joints != base.n_joints) {
      throw InputError("data joint count does not match model");
    }
    if (seq.positions.empty()) {
      throw InputError("identification data carries no measured positions");
    }
    if ((seq.time.back() - seq.time.front()) < 2.0) {
      throw InputError("identification data must cover at least 2 s");
    }
  }

  const int n = base.n_joints;
  const std::size_t dim_full = ParamVector::dimension(n);
  for (int j = 0; j < n; ++j) {
    const std::size_t bi = 3 * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
    if (bounds.lower[bi] < -0.2 - 1e-12 || bounds.upper[bi] > 0.2 + 1e-12) {
      throw InputError("joint_bias bounds exceed the model bias bound of 0.2 rad");
    }
  }

  // entries with zero bound width are pinned; the optimizer only sees the rest
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < dim_full; ++i) {
    if (bounds.upper[i] > bounds.lower[i]) free_idx.push_back(i);
  }
  if (free_idx.empty()) {
    throw InputError("all parameter bounds are degenerate (lower == upper)");
  }

  auto assemble = [&](const std::vector<double>& x) {
    ParamVector p;
    p.n_joints = n;
    p.values = bounds.lower;  // pinned entries keep the bound value
    for (std::size_t f = 0; f < free_idx.size(); ++f) {
      const std::size_t i = free_idx[f];
      p.values[i] = bounds.lower[i] + x[f] * (bounds.upper[i] - bounds.lower[i]);
    }
    return p;
  };

  std::vector<std::vector<JointState>> initials;
  initials.reserve(data.size());
  for (const auto& seq : data) initials.push_back(initial_states_from(seq));

  auto objective = [&](const std::vector<std::vector<double>>& rows) {
    std::vector<ParamVector> pop;
    pop.reserve(rows.size());
    for (const auto& row : rows) pop.push_back(assemble(row));

    std::vector<double> mean_losses(rows.size(), 0.0);
    for (std::size_t s = 0; s < data.size(); ++s) {
      const auto part = evaluate_population(base, pop, data[s], sim, cfg.jobs, nullptr);
      for (std::size_t e = 0; e < rows.size(); ++e) {
        mean_losses[e] += part[e] / static_cast<double>(data.size());
      }
    }
    return mean_losses;
  };

  CmaOptions opts;
  opts.population_size = cfg.population_size;
  opts.max_iterations = cfg.max_iterations;
  opts.initial_sigma = cfg.initial_sigma;
  opts.seed = cfg.seed;
  if (cfg.target_loss) opts.target_value = *cfg.target_loss;

  const CmaResult raw = cma_es_minimize(static_cast<int>(free_idx.size()), objective, opts);

  FitResult result;
  result.best_params = assemble(raw.best);
  result.best_loss = raw.best_value;
  result.score_trace = raw.history;
  result.evaluations = raw.evaluations;
  result.iterations = raw.iterations;
  result.converged = raw.converged;
  return result;
}

FitResult cma_es_fit(const RobotModel& base, const Trajectory& data,
                     const ParamBounds& bounds, const FitConfig& cfg,
                     const SimConfig& sim) {
  return cma_es_fit(base, std::span<const Trajectory>(&data, 1), bounds, cfg, sim);
}

PhasePortraitMetrics delta_phase_metrics(const Trajectory& real, const Trajectory& sim) {
  check_aligned(real, sim);
  if (real.positions.empty() || sim.positions.empty() || real.velocities.empty() ||
      sim.velocities.empty()) {
    throw InputError("delta phase metrics need positions and velocities on both sides");
  }
  const int n = real.n_joints;
  const std::size_t k = real.samples();
  PhasePortraitMetrics m;
  m.mean_dq.assign(static_cast<std::size_t>(n), 0.0);
  m.rms_dq.assign(static_cast<std::size_t>(n), 0.0);
  m.rms_dqd.assign(static_cast<std::size_t>(n), 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      const double dq = sim.position(i, j) - real.position(i, j);
      const double dqd = sim.velocity(i, j) - real.velocity(i, j);
      m.mean_dq[static_cast<std::size_t>(j)] += dq;
      m.rms_dq[static_cast<std::size_t>(j)] += dq * dq;
      m.rms_dqd[static_cast<std::size_t>(j)] += dqd * dqd;
    }
  }
  for (int j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    m.mean_dq[ju] /= static_cast<double>(k);
    m.rms_dq[ju] = std::sqrt(m.rms_dq[ju] / static_cast<double>(k));
    m.rms_dqd[ju] = std::sqrt(m.rms_dqd[ju] / static_cast<double>(k));
  }
  return m;
}

}  // namespace actkit
