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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discordium/measure.hpp"
#include "discordium/optimize.hpp"

namespace discordium {

/// Brute-force projective discord of a qubit-A state: the minimum of the branch-form
/// loss over bases {cos t|0> + e^{if} sin t|1>, complement} with t = (pi/2) i / res and
/// f = 2 pi j / res, i, j in [0, res). The grid at 2*res contains the grid at res.
double grid_discord_qubit(const BipartiteState& rho, int resolution);

/// Brute-force two-sided discord of a two-qubit state over product projective bases,
/// each side parameterised as in grid_discord_qubit (res^4 points).
double grid_discord_two_sided_qubits(const BipartiteState& rho, int resolution);

/// Kraus set with the given number of operators from a Haar isometry H^n -> H^n (x) C^outcomes.
KrausSet random_kraus_set(Index n, Index outcomes, Rng& rng);

/// Haar-random extension basis of H^N for an n_a-dimensional space.
NeumarkBasis random_neumark_basis(Index n_a, Index n, Rng& rng);

/// |S(rho || rho^A (x) I/n_B) - (S(rho^A) - S(rho^AB) + log2 n_B)|
double conditional_relative_entropy_residual(const BipartiteState& rho);

/// |S(sum p_a |a><a| (x) rho_a) - H(p) - sum p_a S(rho_a)| for a random classical state.
double joint_entropy_residual(Index n_a, Index n_b, Rng& rng);

struct BatteryReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  std::vector<std::uint64_t> seeds_of_failures;
};

enum class StateEnsemble { Random, Classical };

struct BatteryInfo {
  std::string_view name;
  double tolerance;
  std::string_view checks;
};

/// Registered batteries with their default tolerances.
std::span<const BatteryInfo> battery_table();

/// Runs independent trials of a registered battery. Trial i draws everything
/// from make_rng(seed + i), so a failing trial reproduces alone as
/// run_battery(name, 1, that_seed). Trials may run concurrently; the report is merged in
/// trial order. Throws std::invalid_argument for an unknown name.
BatteryReport run_battery(std::string_view name, std::size_t trials, std::uint64_t seed,
                          std::optional<double> tolerance = std::nullopt,
                          StateEnsemble ensemble = StateEnsemble::Random,
                          const OptimizerConfig& cfg = {});

}  // namespace discordium
