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

#include <string>
#include <vector>

#include "discordium/entropy.hpp"
#include "discordium/measure.hpp"
#include "discordium/optimize.hpp"

namespace discordium {

enum class DiscordKind {
  Projective,  // orthonormal bases of H^A
  RankOne,     // rank-one POVMs; identical functional to Neumark
  Neumark,     // projective measurements on an N-dimensional extension of H^A
  TwoSided,    // product of Neumark measurements on A and on B
};

struct DiscordVariant {
  DiscordKind kind = DiscordKind::Projective;
  Index extension_a = 0;  // N, or N_A for two-sided
  Index extension_b = 0;  // N_B for two-sided

  /// "P", "R(4)", "PE(4)", "two-sided-PE(4,4)"
  std::string label() const;
};

/// The optimising measurement: one unitary per measured side whose columns are the
/// measurement basis (n_A x n_A for P, N x N otherwise).
struct OptimalMeasurement {
  std::vector<ComplexMatrix> bases;
};

struct DiscordResult {
  DiscordVariant variant;
  Bits value;
  OptimalMeasurement measurement;
  OptimizationOutcome outcome;
};

/// S(rho^A) - S(rho^AB) + S(rho~^AB) - S(rho~^A) for one fixed measurement; rho~ is the
/// post-measurement state on H^A (x) H^B.
Bits loss_functional(const BipartiteState& rho, const KrausSet& m);

/// S(rho^A) - S(rho^AB) + sum_alpha p_alpha S(rho_alpha^B), the branch form.
Bits ensemble_loss(const BipartiteState& rho, const KrausSet& m);
Bits ensemble_loss(const BipartiteState& rho, const RankOnePOVM& m);

/// Two-sided objective for a product of Neumark measurements. Both outcomes land on
/// orthogonal flags of the extended spaces, so the bracket reduces to minus the mutual
/// information of the joint outcome distribution.
Bits two_sided_loss(const BipartiteState& rho, const NeumarkBasis& nb_a, const NeumarkBasis& nb_b);

/// rank(rho^A)^2 clamped to [n_A, n_A^2].
Index default_extension_dim(const BipartiteState& rho);
/// The same rule applied to subsystem B.
Index default_extension_dim_b(const BipartiteState& rho);

DiscordResult discord_P(const BipartiteState& rho, const OptimizerConfig& cfg = {});
/// Throws DimensionError when n < n_A.
DiscordResult discord_PE(const BipartiteState& rho, Index n, const OptimizerConfig& cfg = {});
/// Same minimisation as discord_PE (every rank-one POVM has a Neumark extension and
/// vice versa); only the reported variant differs.
DiscordResult discord_R(const BipartiteState& rho, Index n, const OptimizerConfig& cfg = {});
DiscordResult discord_two_sided(const BipartiteState& rho, Index n_a_ext, Index n_b_ext,
                                const OptimizerConfig& cfg = {});

/// Re-evaluates the variant's functional on a stored measurement.
Bits evaluate(const BipartiteState& rho, const DiscordVariant& variant, const OptimalMeasurement& m);

struct ClassicalityVerdict {
  bool classical = false;
  Bits discord;
  ProjectiveBasis witness;
};

inline constexpr double kClassicalThreshold = 1e-5;

/// classical iff discord_P <= threshold; the witness is the optimising basis.
ClassicalityVerdict is_classical(const BipartiteState& rho, const OptimizerConfig& cfg = {},
                                 double threshold = kClassicalThreshold);

}  // namespace discordium
