// Copyright 2026 The Discordium Authors
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

#include "discordium/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "discordium/parallel.hpp"

namespace discordium {

namespace {

struct LocalResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead with dimension-adaptive coefficients (Gao & Han) for n > 2.
LocalResult nelder_mead(const ParamObjective& objective, const std::vector<double>& x0, double step,
                        int max_iters, double f_tol, double x_tol) {
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = n > 2 ? 1.0 + 2.0 / dn : 2.0;
  const double contract = n > 2 ? 0.75 - 0.5 / dn : 0.5;
  const double shrink = n > 2 ? 1.0 - 1.0 / dn : 0.5;

  LocalResult out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    const double f = objective(x);
    return std::isfinite(f) ? f : std::numeric_limits<double>::max();
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> fx(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    simplex[i][i - 1] += step;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    fx[i] = eval(simplex[i]);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto along = [&](double t, const std::vector<double>& from, std::vector<double>& dst) {
    for (std::size_t j = 0; j < n; ++j) {
      dst[j] = centroid[j] + t * (from[j] - centroid[j]);
    }
  };

  while (out.iterations < max_iters) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    {
      std::vector<std::vector<double>> s2(n + 1);
      std::vector<double> f2(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        s2[i] = std::move(simplex[order[i]]);
        f2[i] = fx[order[i]];
      }
      simplex.swap(s2);
      fx.swap(f2);
    }

    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[0][j]));
      }
    }
    if (fx[n] - fx[0] <= f_tol && diameter <= x_tol) {
      out.converged = true;
      break;
    }
    ++out.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        centroid[j] += simplex[i][j];
      }
    }
    for (double& c : centroid) {
      c /= dn;
    }

    along(-reflect, simplex[n], trial);
    const double fr = eval(trial);
    if (fr < fx[0]) {
      along(-reflect * expand, simplex[n], trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[n] = trial2;
        fx[n] = fe;
      } else {
        simplex[n] = trial;
        fx[n] = fr;
      }
      continue;
    }
    if (fr < fx[n - 1]) {
      simplex[n] = trial;
      fx[n] = fr;
      continue;
    }
    if (fr < fx[n]) {
      along(-reflect * contract, simplex[n], trial2);  // outside contraction
      const double fc = eval(trial2);
      if (fc <= fr) {
        simplex[n] = trial2;
        fx[n] = fc;
        continue;
      }
    } else {
      along(contract, simplex[n], trial2);  // inside contraction
      const double fc = eval(trial2);
      if (fc < fx[n]) {
        simplex[n] = trial2;
        fx[n] = fc;
        continue;
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[0][j] + shrink * (simplex[i][j] - simplex[0][j]);
      }
      fx[i] = eval(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  out.x = simplex[best];
  out.f = fx[best];
  return out;
}

// One restart: a coarse simplex search followed by re-seeded polishing rounds until a
// round gains no more than f_tol. All rounds share the max_iters budget.
LocalResult local_search(const ParamObjective& objective, std::vector<double> x0, const OptimizerConfig& cfg) {
  LocalResult total;
  total.x = x0;
  total.f = objective(x0);
  total.evaluations = 1;
  int budget = cfg.max_iters;
  double step = 0.5;
  bool first = true;
  while (budget > 0) {
    LocalResult r = nelder_mead(objective, total.x, step, budget, cfg.f_tol, cfg.x_tol);
    budget -= std::max(r.iterations, 1);
    total.evaluations += r.evaluations;
    total.iterations += r.iterations;
    const double gain = total.f - r.f;
    if (r.f < total.f) {
      total.f = r.f;
      total.x = std::move(r.x);
    }
    if (!r.converged) {
      break;
    }
    if (!first && gain <= cfg.f_tol) {
      total.converged = true;
      break;
    }
    first = false;
    step = 0.05;
  }
  return total;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) {
    throw std::invalid_argument("optimizer: restarts must be at least 1");
  }
  if (max_iters < 1) {
    throw std::invalid_argument("optimizer: max_iters must be at least 1");
  }
  if (!(f_tol > 0.0) || !(x_tol > 0.0)) {
    throw std::invalid_argument("optimizer: tolerances must be positive");
  }
}

ComplexMatrix to_unitary(std::span<const double> params, Index n) {
  if (static_cast<Index>(params.size()) != n * n) {
    throw DimensionError("to_unitary: expected N^2 parameters");
  }
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  std::size_t k = 0;
  for (Index j = 0; j < n; ++j) {
    h(j, j) = params[k++];
  }
  for (Index r = 0; r < n; ++r) {
    for (Index c = r + 1; c < n; ++c) {
      const Complex z(params[k], params[k + 1]);
      k += 2;
      h(r, c) = z;
      h(c, r) = std::conj(z);
    }
  }
  if (n == 1) {
    return ComplexMatrix::Constant(1, 1, std::polar(1.0, h(0, 0).real()));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(n);
  for (Index j = 0; j < n; ++j) {
    phases(j) = std::polar(1.0, es.eigenvalues()(j));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix to_unitary(const UnitaryParams& p) { return to_unitary(p.params, p.n); }

OptimizationOutcome minimize_params(const ParamObjective& objective, std::size_t n_params,
                                    const OptimizerConfig& cfg) {
  cfg.validate();
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  std::vector<LocalResult> results(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    std::vector<double> x0(n_params, 0.0);
    if (r > 0) {
      Rng rng = make_rng(cfg.seed, r);
      std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
      for (double& x : x0) {
        x = angle(rng);
      }
    }
    results[r] = local_search(objective, std::move(x0), cfg);
  });

  OptimizationOutcome out;
  out.restart_values.reserve(restarts);
  for (std::size_t r = 0; r < restarts; ++r) {
    out.restart_values.push_back(results[r].f);
    out.evaluations += results[r].evaluations;
    if (r == 0 || results[r].f < results[out.best_restart].f) {
      out.best_restart = r;
    }
  }
  out.best_value = results[out.best_restart].f;
  out.best_params = results[out.best_restart].x;
  out.converged = results[out.best_restart].converged;
  return out;
}

OptimizationOutcome minimize(const std::function<double(const UnitaryParams&)>& objective, Index n,
                             const OptimizerConfig& cfg) {
  const auto count = static_cast<std::size_t>(n * n);
  return minimize_params(
      [&](std::span<const double> x) {
        return objective(UnitaryParams{n, std::vector<double>(x.begin(), x.end())});
      },
      count, cfg);
}

}  // namespace discordium
