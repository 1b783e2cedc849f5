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

#include "actkit/cma_es.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "actkit/errors.hpp"

namespace actkit {

namespace {

// Deterministic standard-normal stream: mt19937_64 bits through a
// Box-Muller transform. std::normal_distribution is implementation
// defined, which would break the reproducible-from-seed contract.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;  // (0,1]
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1p-53;          // [0,1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

// Box-constraint weight: squared projection distances are scaled into
// objective units via the robust spread of the generation's values, so
// the repair penalty stays comparable to genuine fitness differences
// instead of swamping them.
double penalty_weight(const std::vector<double>& raw, const std::vector<double>& sq_dist) {
  std::vector<double> finite;
  for (double f : raw) {
    if (std::isfinite(f)) finite.push_back(f);
  }
  const double med = median_of(finite);
  std::vector<double> dev;
  dev.reserve(finite.size());
  for (double f : finite) dev.push_back(std::abs(f - med));
  const double mad = median_of(dev);
  std::vector<double> active;
  for (double d : sq_dist) {
    if (d > 0.0) active.push_back(d);
  }
  const double dmed = active.empty() ? 1.0 : median_of(active);
  const double spread = mad + 1e-12 * (1.0 + std::abs(med));
  return spread / (dmed + 1e-12);
}

}  // namespace

CmaResult cma_es_minimize(int dim, const BatchObjective& objective,
                          const CmaOptions& opts,
                          std::span<const double> initial_mean) {
  if (dim <= 0) throw InputError("cma_es_minimize needs dim > 0");
  if (opts.max_iterations < 1) throw InputError("max_iterations must be >= 1");
  if (!(opts.initial_sigma > 0) || opts.initial_sigma > 1.0) {
    throw InputError("initial_sigma must lie in (0, 1]");
  }
  const int n = dim;
  const int lambda = opts.population_size > 0
                         ? opts.population_size
                         : 4 + static_cast<int>(std::floor(3.0 * std::log(n)));
  if (lambda < 4) throw InputError("population_size must be >= 4");
  const int mu = lambda / 2;

  // log-rank recombination weights over the whole population; the back
  // half carries negative weights for the rank-mu update (standard
  // tutorial defaults)
  Eigen::VectorXd w_prime(lambda);
  for (int i = 0; i < lambda; ++i) {
    w_prime[i] = std::log((lambda + 1) / 2.0) - std::log(i + 1.0);
  }
  const double sum_pos = w_prime.head(mu).sum();
  const double mu_eff =
      sum_pos * sum_pos / w_prime.head(mu).squaredNorm();
  const double sum_neg = w_prime.tail(lambda - mu).sum();
  const double mu_eff_neg =
      sum_neg * sum_neg / w_prime.tail(lambda - mu).squaredNorm();

  const double c_sigma = (mu_eff + 2.0) / (n + mu_eff + 5.0);
  const double d_sigma =
      1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (n + 1.0)) - 1.0) + c_sigma;
  const double c_c = (4.0 + mu_eff / n) / (n + 4.0 + 2.0 * mu_eff / n);
  const double c_1 = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff);
  const double c_mu = std::min(1.0 - c_1, 2.0 * (0.25 + mu_eff + 1.0 / mu_eff - 2.0) /
                                              ((n + 2.0) * (n + 2.0) + mu_eff));
  const double alpha_mu = 1.0 + c_1 / c_mu;
  const double alpha_mueff = 1.0 + 2.0 * mu_eff_neg / (mu_eff + 2.0);
  const double alpha_posdef = (1.0 - c_1 - c_mu) / (n * c_mu);
  const double neg_scale = std::min({alpha_mu, alpha_mueff, alpha_posdef});

  Eigen::VectorXd weights(lambda);
  for (int i = 0; i < lambda; ++i) {
    weights[i] = w_prime[i] >= 0 ? w_prime[i] / sum_pos
                                 : neg_scale * w_prime[i] / -sum_neg;
  }
  const double chi_n =
      std::sqrt(static_cast<double>(n)) *
      (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * static_cast<double>(n) * n));

  Eigen::VectorXd mean = Eigen::VectorXd::Constant(n, 0.5);
  if (!initial_mean.empty()) {
    if (initial_mean.size() != static_cast<std::size_t>(n)) {
      throw InputError("initial_mean size mismatch");
    }
    for (int i = 0; i < n; ++i) mean[i] = initial_mean[static_cast<std::size_t>(i)];
  }
  double sigma = opts.initial_sigma;
  Eigen::MatrixXd C = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd D = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd p_sigma = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd p_c = Eigen::VectorXd::Zero(n);

  GaussianSampler gauss(opts.seed);

  CmaResult result;
  result.best_value = std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> projected(
      static_cast<std::size_t>(lambda), std::vector<double>(static_cast<std::size_t>(n)));
  Eigen::MatrixXd ys(n, lambda);
  std::vector<double> sq_dist(static_cast<std::size_t>(lambda));

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    for (int k = 0; k < lambda; ++k) {
      Eigen::VectorXd z(n);
      for (int i = 0; i < n; ++i) z[i] = gauss.next();
      const Eigen::VectorXd y = B * (D.asDiagonal() * z);
      ys.col(k) = y;
      double d2 = 0.0;
      for (int i = 0; i < n; ++i) {
        const double x = mean[i] + sigma * y[i];
        const double xp = std::clamp(x, 0.0, 1.0);
        projected[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = xp;
        d2 += (x - xp) * (x - xp);
      }
      sq_dist[static_cast<std::size_t>(k)] = d2;
    }

    const std::vector<double> raw = objective(projected);
    if (raw.size() != static_cast<std::size_t>(lambda)) {
      throw NumericalError("batch objective returned wrong number of values");
    }
    result.evaluations += lambda;

    const double gamma = penalty_weight(raw, sq_dist);
    std::vector<double> fitness(static_cast<std::size_t>(lambda));
    bool any_finite = false;
    for (int k = 0; k < lambda; ++k) {
      const double f = raw[static_cast<std::size_t>(k)];
      fitness[static_cast<std::size_t>(k)] =
          std::isnan(f) ? std::numeric_limits<double>::infinity()
                        : f + gamma * sq_dist[static_cast<std::size_t>(k)];
      any_finite = any_finite || std::isfinite(fitness[static_cast<std::size_t>(k)]);
    }
    if (!any_finite) {
      throw NumericalError("every candidate of a generation evaluated non-finite");
    }

    std::vector<int> order(static_cast<std::size_t>(lambda));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double fa = fitness[static_cast<std::size_t>(a)];
      const double fb = fitness[static_cast<std::size_t>(b)];
      if (fa != fb) return fa < fb;
      return a < b;  // deterministic tie break
    });

    // best-ever bookkeeping uses the raw loss of the feasible (projected) point
    const int lead = order[0];
    if (raw[static_cast<std::size_t>(lead)] < result.best_value) {
      result.best_value = raw[static_cast<std::size_t>(lead)];
      result.best = projected[static_cast<std::size_t>(lead)];
    }
    result.history.push_back(result.best_value);
    result.iterations = iter + 1;

    if (result.best_value <= opts.target_value) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd y_w = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < mu; ++i) y_w += weights[i] * ys.col(order[static_cast<std::size_t>(i)]);

    mean += sigma * y_w;

    // cumulative step-size adaptation
    Eigen::VectorXd c_inv_half_yw =
        B * (D.cwiseInverse().asDiagonal() * (B.transpose() * y_w));
    p_sigma = (1.0 - c_sigma) * p_sigma +
              std::sqrt(c_sigma * (2.0 - c_sigma) * mu_eff) * c_inv_half_yw;

    const double ps_norm = p_sigma.norm();
    const double expected_decay =
        std::sqrt(1.0 - std::pow(1.0 - c_sigma, 2.0 * (iter + 1)));
    const bool h_sigma = ps_norm / expected_decay / chi_n < 1.4 + 2.0 / (n + 1.0);

    p_c = (1.0 - c_c) * p_c;
    if (h_sigma) p_c += std::sqrt(c_c * (2.0 - c_c) * mu_eff) * y_w;

    // rank-one + rank-mu covariance update; losers enter with negative
    // weights, rescaled by their Mahalanobis length to keep C positive
    const double c1a = c_1 * (1.0 - (h_sigma ? 0.0 : 1.0) * c_c * (2.0 - c_c));
    C *= (1.0 - c1a - c_mu * weights.sum());
    C += c_1 * (p_c * p_c.transpose());
    for (int i = 0; i < lambda; ++i) {
      const auto& y = ys.col(order[static_cast<std::size_t>(i)]);
      double w = weights[i];
      if (w < 0) {
        const Eigen::VectorXd whitened =
            B * (D.cwiseInverse().asDiagonal() * (B.transpose() * y));
        w *= n / whitened.squaredNorm();
      }
      C += c_mu * w * (y * y.transpose());
    }

    sigma *= std::exp((c_sigma / d_sigma) * (ps_norm / chi_n - 1.0));
    if (!std::isfinite(sigma) || !mean.allFinite()) {
      throw NumericalError("cma-es state diverged (non-finite mean or step size)");
    }

    C = 0.5 * (C + C.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(C);
    if (eig.info() != Eigen::Success) {
      throw NumericalError("covariance eigendecomposition failed");
    }
    B = eig.eigenvectors();
    Eigen::VectorXd evals = eig.eigenvalues();
    const double floor_ev = std::max(evals.maxCoeff(), 1e-30) * 1e-14;
    for (int i = 0; i < n; ++i) evals[i] = std::max(evals[i], floor_ev);
    D = evals.cwiseSqrt();

    if (sigma * D.maxCoeff() < opts.sigma_stop) {
      result.converged = true;
      break;
    }
  }

  if (result.best.empty()) {
    throw NumericalError("cma-es produced no finite candidate");
  }
  return result;
}

}  // namespace actkit
