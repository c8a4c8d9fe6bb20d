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
#include <numbers>

#include "discordium/measure.hpp"
#include "discordium/verify.hpp"
#include "oracles.hpp"

using namespace discordium;

namespace {

RankOnePOVM trine() {
  std::vector<ComplexVector> v;
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 3.0;
    ComplexVector g(2);
    g << std::cos(a), std::sin(a);
    v.push_back(std::sqrt(2.0 / 3.0) * g);
  }
  return RankOnePOVM(2, v);
}

}  // namespace

TEST_CASE("trine POVM has weights 2/3") {
  const RankOnePOVM t = trine();
  REQUIRE(t.size() == 3);
  for (double w : t.weights()) {
    CHECK(w == doctest::Approx(2.0 / 3.0));
  }
  CHECK(completeness_residual(t.kraus()) < 1e-14);
}

TEST_CASE("incomplete measurements are rejected") {
  std::vector<ComplexMatrix> ops{ComplexMatrix::Identity(2, 2) * 0.9};
  CHECK_THROWS_AS(KrausSet{ops}, InvariantViolation);
  ComplexVector g(2);
  g << 1.0, 0.0;
  CHECK_THROWS_AS(RankOnePOVM(2, {g}), InvariantViolation);
  CHECK_THROWS_AS(ProjectiveBasis(ComplexMatrix::Ones(2, 2)), InvariantViolation);
  CHECK_THROWS_AS(NeumarkBasis(3, ComplexMatrix::Identity(2, 2)), DimensionError);
}

TEST_CASE("zero-weight POVM vectors are dropped") {
  std::vector<ComplexVector> v{ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1), ComplexVector::Zero(2)};
  CHECK(RankOnePOVM(2, v).size() == 2);
}

TEST_CASE("Neumark extension round trip") {
  const RankOnePOVM t = trine();
  const NeumarkBasis nb = neumark_extension(t);
  CHECK(nb.extension_dim() == 3);
  const RankOnePOVM back = from_neumark(nb);
  REQUIRE(back.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK((back.vectors()[k] - t.vectors()[k]).cwiseAbs().maxCoeff() < 1e-13);
  }
  Rng rng = make_rng(1);
  const ProjectiveBasis pb(random_unitary(2, rng));
  const RankOnePOVM embedded = from_neumark(NeumarkBasis::embed(pb, 4));
  CHECK(embedded.size() == 2);
  CHECK((embedded.vectors()[0] - pb.basis().col(0)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("conditional blocks agree with the explicit partial trace") {
  Rng rng = make_rng(2);
  const Index na = 3;
  const Index nb = 2;
  const ComplexMatrix rho = random_density(na * nb, 4, rng).matrix();
  const ComplexMatrix g = ginibre_matrix(na, na, rng);
  const ComplexMatrix effect = g.adjoint() * g;
  const ComplexMatrix full = oracle::kron(effect, ComplexMatrix::Identity(nb, nb)) * rho;
  CHECK(oracle::max_abs(conditional_block(rho, na, nb, effect) - oracle::trace_out_a(full, na, nb)) < 1e-13);
  const ComplexVector v = ginibre_matrix(na, 1, rng).col(0);
  const ComplexMatrix proj = v * v.adjoint();
  CHECK(oracle::max_abs(rank_one_block(rho, na, nb, v) - conditional_block(rho, na, nb, proj)) < 1e-13);
}

TEST_CASE("apply_one_sided agrees with the Kronecker form") {
  Rng rng = make_rng(3);
  const BipartiteState rho(2, 3, random_density(6, 6, rng));
  const KrausSet k = random_kraus_set(2, 3, rng);
  ComplexMatrix expected = ComplexMatrix::Zero(6, 6);
  for (const auto& a : k.operators()) {
    const ComplexMatrix big = oracle::kron(a, ComplexMatrix::Identity(3, 3));
    expected += big * rho.matrix() * big.adjoint();
  }
  CHECK(oracle::max_abs(apply_one_sided(rho, k).matrix() - expected) < 1e-13);
  CHECK_THROWS_AS(apply_one_sided(rho, random_kraus_set(3, 2, rng)), DimensionError);
}

TEST_CASE("branch ensemble drops impossible outcomes and sums to one") {
  ComplexVector e00 = ComplexVector::Zero(4);
  e00(0) = 1.0;
  const BipartiteState pure(2, 2, DensityMatrix::from_pure(e00));
  const ConditionalEnsemble ens = branch_ensemble(pure, ProjectiveBasis::computational(2).kraus());
  REQUIRE(ens.branches.size() == 1);
  CHECK(ens.branches[0].probability == doctest::Approx(1.0));

  Rng rng = make_rng(4);
  const BipartiteState rho(3, 2, random_density(6, 3, rng));
  double total = 0.0;
  for (const auto& b : branch_ensemble(rho, random_kraus_set(3, 4, rng)).branches) {
    total += b.probability;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("rank-one refinement is complete and keeps the effects") {
  Rng rng = make_rng(5);
  const KrausSet k = random_kraus_set(3, 2, rng);
  const RankOnePOVM r = rank_one_refine(k);
  CHECK(r.size() == 6);
  CHECK(completeness_residual(r.kraus()) < 1e-12);
}

TEST_CASE("randomizing measurement maps every state to I/n (x) rho^B") {
  Rng rng = make_rng(6);
  for (Index na : {2, 3}) {
    const BipartiteState rho(na, 2, random_density(na * 2, 2, rng));
    const KrausSet m = randomizing_measurement(na);
    CHECK(m.size() == static_cast<std::size_t>(na * na));
    const ComplexMatrix mixed = ComplexMatrix::Identity(na, na) / static_cast<double>(na);
    const ComplexMatrix expected = oracle::kron(mixed, oracle::trace_out_a(rho.matrix(), na, 2));
    CHECK(oracle::max_abs(apply_one_sided(rho, m).matrix() - expected) < 1e-13);
  }
}

TEST_CASE("two-sided measurement preserves trace and dimensions") {
  Rng rng = make_rng(7);
  const BipartiteState rho(2, 2, random_density(4, 4, rng));
  const BipartiteState out = two_sided_apply(rho, random_neumark_basis(2, 4, rng), random_neumark_basis(2, 3, rng));
  CHECK(out.n_a() == 2);
  CHECK(out.matrix().trace().real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(two_sided_apply(rho, random_neumark_basis(3, 4, rng), random_neumark_basis(2, 3, rng)),
                  DimensionError);
}
