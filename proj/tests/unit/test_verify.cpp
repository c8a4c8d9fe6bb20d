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

#include "discordium/discord.hpp"
#include "discordium/entropy.hpp"
#include "discordium/verify.hpp"
#include "oracles.hpp"

using namespace discordium;

TEST_CASE("grid discord of simple states") {
  Rng rng = make_rng(1);
  for (int res : {1, 3, 8}) {
    CHECK(std::abs(grid_discord_qubit(random_product_state(2, 2, rng), res)) < 1e-9);
    CHECK(std::abs(grid_discord_qubit(bell_state(), res) - 1.0) < 1e-9);
  }
  CHECK(std::abs(grid_discord_two_sided_qubits(bell_state(), 4) - 1.0) < 1e-9);
  CHECK(std::abs(grid_discord_two_sided_qubits(random_product_state(2, 2, rng), 3)) < 1e-9);
}

TEST_CASE("grid refinement never increases the minimum") {
  Rng rng = make_rng(2);
  for (int t = 0; t < 5; ++t) {
    const BipartiteState rho(2, 2, random_density(4, 1 + t % 4, rng));
    for (int r : {3, 7, 20}) {
      CHECK(grid_discord_qubit(rho, 2 * r) <= grid_discord_qubit(rho, r) + 1e-12);
    }
  }
}

TEST_CASE("grid oracle agrees with the optimizer on werner(0.7)") {
  const BipartiteState w = werner_state(0.7);
  CHECK(std::abs(grid_discord_qubit(w, 400) - discord_P(w).value.value) < 1e-4);
  CHECK(std::abs(grid_discord_qubit(w, 400) - oracle::werner_discord(0.7)) < 1e-4);
}

TEST_CASE("grid oracle rejects bad input") {
  CHECK_THROWS_AS(grid_discord_qubit(BipartiteState(3, 2, DensityMatrix::maximally_mixed(6)), 4), DimensionError);
  CHECK_THROWS_AS(grid_discord_qubit(bell_state(), 0), std::invalid_argument);
}

TEST_CASE("random Kraus sets are complete") {
  Rng rng = make_rng(3);
  for (Index k = 1; k <= 4; ++k) {
    const KrausSet m = random_kraus_set(3, k, rng);
    CHECK(m.size() == static_cast<std::size_t>(k));
    CHECK(completeness_residual(m) < 1e-12);
  }
}

TEST_CASE("entropy identities") {
  Rng rng = make_rng(4);
  for (int t = 0; t < 10; ++t) {
    CHECK(conditional_relative_entropy_residual(BipartiteState(2, 3, random_density(6, 6, rng))) < 1e-10);
    CHECK(joint_entropy_residual(3, 2, rng) < 1e-10);
  }
}

TEST_CASE("battery table") {
  CHECK(battery_table().size() == 7);
  CHECK_THROWS_AS(run_battery("bogus", 1, 0), std::invalid_argument);
}

TEST_CASE("nonnegativity battery, 500 trials at 1e-7") {
  const BatteryReport r = run_battery("nonnegativity", 500, 0, 1e-7);
  CHECK(r.failures == 0);
  CHECK(r.trials == 500);
  CHECK(r.tolerance == 1e-7);
}

TEST_CASE("marginal invariance battery, 200 trials") {
  const BatteryReport r = run_battery("marginal_invariance", 200, 0);
  CHECK(r.worst_violation <= 1e-10);
}

TEST_CASE("inequality chain on classical states") {
  const BatteryReport r = run_battery("inequality_chain", 50, 0, 1e-5, StateEnsemble::Classical);
  CHECK(r.failures == 0);
}

TEST_CASE("batteries are reproducible and trials replay alone") {
  const BatteryReport a = run_battery("relative_entropy_monotonicity", 20, 77);
  const BatteryReport b = run_battery("relative_entropy_monotonicity", 20, 77);
  CHECK(a.worst_violation == b.worst_violation);
  double worst = -1.0;
  for (std::uint64_t s = 5; s < 15; ++s) {
    worst = std::max(worst, run_battery("refinement_monotonicity", 1, s).worst_violation);
  }
  CHECK(worst == run_battery("refinement_monotonicity", 10, 5).worst_violation);
  const BatteryReport strict = run_battery("refinement_monotonicity", 10, 5, -1.0);
  CHECK(strict.failures == 10);
  CHECK(strict.seeds_of_failures.front() == 5);
}
