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

#include <optional>
#include <vector>

#include "discordium/entropy.hpp"
#include "discordium/optimize.hpp"

namespace discordium {

enum class EofMethod { Wootters, Decomposition };

struct EntanglementResult {
  std::optional<double> concurrence;  // set by the Wootters route
  Bits eof;
  EofMethod method = EofMethod::Wootters;
  ComplexMatrix decomposition;        // K x K unitary of the best decomposition found
  std::optional<OptimizationOutcome> outcome;
};

/// h(x) = -x log2 x - (1-x) log2 (1-x)
double binary_entropy(double x);

/// h((1 + sqrt(1 - C^2)) / 2)
double eof_from_concurrence(double c);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), l_i the decreasing square roots of the
/// spectrum of rho (sy (x) sy) rho* (sy (x) sy). Throws DimensionError unless dim = 4.
double concurrence_2q(const DensityMatrix& rho);

EntanglementResult eof_2q(const DensityMatrix& rho);

/// Average entanglement sum_l |phi_l|^2 S(tr_right |phi_l><phi_l| / |phi_l|^2) of an
/// unnormalised pure-state ensemble on n_left x n_right.
double decomposition_cost(const std::vector<ComplexVector>& vectors, Index n_left, Index n_right);

/// Minimises decomposition_cost over the K-element decompositions
/// phi_l = sum_i U_li sqrt(p_i) |psi_i>, U in U(K), built from rho's eigenvectors.
/// Throws std::invalid_argument when K < rank(rho).
EntanglementResult eof_via_decomposition(const DensityMatrix& rho, Index n_left, Index n_right, Index k,
                                         const OptimizerConfig& cfg = {});

inline constexpr Index kDefaultDecompositionSize = 4;

struct KoashiWinterReport {
  double residual = 0.0;                       // |D_PE - rhs|
  std::optional<double> projective_residual;   // |D_P - rhs|, n_A = 2 only
  double discord_pe = 0.0;
  std::optional<double> discord_p;
  double eof_bc = 0.0;
  double entropy_a = 0.0;
  double entropy_ab = 0.0;
  double rhs = 0.0;                            // E(rho^BC) + S(rho^A) - S(rho^AB)
  double induced_decomposition_cost = 0.0;     // EOF cost of the decomposition induced by the PE optimum
  DensityMatrix rho_bc;
};

/// Purifies rho^AB onto a qubit C, evaluates E(rho^BC) with the Wootters formula and
/// compares D_PE(rho^AB) against E(rho^BC) + S(rho^A) - S(rho^AB).
/// Throws std::invalid_argument unless n_B = 2 and rank(rho) <= 2.
KoashiWinterReport koashi_winter_residual(const BipartiteState& rho, Index n, const OptimizerConfig& cfg = {});

}  // namespace discordium
