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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "discordium/qmat.hpp"

namespace discordium {

struct OptimizerConfig {
  int restarts = 20;
  int max_iters = 2000;   // simplex iterations per restart
  double f_tol = 1e-9;    // bits
  double x_tol = 1e-6;    // simplex diameter, max-norm
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless restarts >= 1, max_iters >= 1 and both tolerances > 0.
  void validate() const;
};

/// N^2 reals parameterising U(N) through a Hermitian generator.
struct UnitaryParams {
  Index n = 0;
  std::vector<double> params;
};

/// U = exp(iH). H has the first N params on its diagonal; the rest fill the strict
/// upper triangle row by row as (re, im) pairs. to_unitary of zeros is the identity.
ComplexMatrix to_unitary(std::span<const double> params, Index n);
ComplexMatrix to_unitary(const UnitaryParams& p);

struct OptimizationOutcome {
  double best_value = 0.0;
  std::vector<double> best_params;
  std::size_t evaluations = 0;
  std::vector<double> restart_values;
  std::size_t best_restart = 0;
  bool converged = false;
};

using ParamObjective = std::function<double(std::span<const double>)>;

/// Multi-restart Nelder-Mead over R^n_params. Restart 0 starts at the origin; restart r > 0
/// starts from a uniform draw in [-pi, pi]^n_params from stream r of cfg.seed. Restarts may
/// run concurrently; the result does not depend on scheduling (ties go to the lowest index).
OptimizationOutcome minimize_params(const ParamObjective& objective, std::size_t n_params,
                                    const OptimizerConfig& cfg);

/// minimize_params over the N^2 generator parameters of U(N).
OptimizationOutcome minimize(const std::function<double(const UnitaryParams&)>& objective, Index n,
                             const OptimizerConfig& cfg);

}  // namespace discordium
