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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "discordium/optimize.hpp"
#include "discordium/parallel.hpp"
#include "oracles.hpp"

using namespace discordium;

TEST_CASE("to_unitary produces unitaries and the identity at the origin") {
  std::vector<double> zero(9, 0.0);
  CHECK(oracle::max_abs(to_unitary(zero, 3) - ComplexMatrix::Identity(3, 3)) < 1e-15);
  Rng rng = make_rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (Index n = 1; n <= 4; ++n) {
    std::vector<double> p(static_cast<std::size_t>(n * n));
    for (double& x : p) {
      x = u(rng);
    }
    const ComplexMatrix m = to_unitary(p, n);
    CHECK(oracle::max_abs(m.adjoint() * m - ComplexMatrix::Identity(n, n)) < 1e-12);
  }
  std::vector<double> one{0.5};
  CHECK(std::abs(to_unitary(one, 1)(0, 0) - std::polar(1.0, 0.5)) < 1e-15);
}

TEST_CASE("a diagonal generator gives a diagonal phase matrix") {
  std::vector<double> p{0.1, -0.4, 0.0, 0.0};
  const ComplexMatrix m = to_unitary(p, 2);
  CHECK(std::abs(m(0, 0) - std::polar(1.0, 0.1)) < 1e-14);
  CHECK(std::abs(m(1, 1) - std::polar(1.0, -0.4)) < 1e-14);
  CHECK(std::abs(m(0, 1)) < 1e-15);
}

TEST_CASE("Nelder-Mead finds the minimum of a shifted quadratic") {
  const ParamObjective f = [](std::span<const double> x) {
    double s = 3.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - 0.1 * static_cast<double>(i + 1);
      s += d * d;
    }
    return s;
  };
  OptimizerConfig cfg;
  cfg.restarts = 4;
  const OptimizationOutcome out = minimize_params(f, 5, cfg);
  CHECK(out.best_value == doctest::Approx(3.0).epsilon(1e-9));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(out.best_params[i] == doctest::Approx(0.1 * static_cast<double>(i + 1)).epsilon(1e-4));
  }
  CHECK(out.restart_values.size() == 4);
  CHECK(out.converged);
}

TEST_CASE("Rosenbrock valley in two dimensions") {
  const ParamObjective f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  OptimizerConfig cfg;
  cfg.restarts = 3;
  cfg.max_iters = 5000;
  cfg.f_tol = 1e-14;
  cfg.x_tol = 1e-8;
  const OptimizationOutcome out = minimize_params(f, 2, cfg);
  CHECK(out.best_value < 1e-10);
  CHECK(out.best_params[0] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("optimizer results do not depend on the thread count") {
  const auto objective = [](const UnitaryParams& p) {
    const ComplexMatrix u = to_unitary(p);
    return std::norm(u(0, 1) - Complex(0.3, 0.4));
  };
  OptimizerConfig cfg;
  cfg.restarts = 6;
  cfg.seed = 17;
  setenv("DISCORDIUM_THREADS", "1", 1);
  const OptimizationOutcome serial = minimize(objective, 2, cfg);
  setenv("DISCORDIUM_THREADS", "4", 1);
  const OptimizationOutcome parallel = minimize(objective, 2, cfg);
  unsetenv("DISCORDIUM_THREADS");
  CHECK(serial.best_value == parallel.best_value);
  CHECK(serial.best_params == parallel.best_params);
  CHECK(serial.restart_values == parallel.restart_values);
  CHECK(serial.best_value < 1e-10);
}

TEST_CASE("configuration validation") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = OptimizerConfig{};
  cfg.f_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("parallel_for visits every index once and rethrows") {
  setenv("DISCORDIUM_THREADS", "3", 1);
  CHECK(max_threads() == 3);
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) {
    CHECK(h == 1);
  }
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("seven");
                  }),
                  std::runtime_error);
  unsetenv("DISCORDIUM_THREADS");
  CHECK(max_threads() >= 1);
}
