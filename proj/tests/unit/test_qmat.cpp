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

#include "discordium/qmat.hpp"
#include "oracles.hpp"

using namespace discordium;

TEST_CASE("tensor_product matches the index formula") {
  Rng rng = make_rng(1);
  const ComplexMatrix a = ginibre_matrix(2, 3, rng);
  const ComplexMatrix b = ginibre_matrix(3, 2, rng);
  CHECK(oracle::max_abs(tensor_product(a, b) - oracle::kron(a, b)) < 1e-14);
}

TEST_CASE("partial_trace matches the index formula") {
  Rng rng = make_rng(2);
  for (auto [na, nb] : {std::pair<Index, Index>{2, 2}, {2, 3}, {3, 2}}) {
    const ComplexMatrix m = random_density(na * nb, na * nb, rng).matrix();
    CHECK(oracle::max_abs(partial_trace(m, na, nb, Subsystem::A) - oracle::trace_out_b(m, na, nb)) < 1e-14);
    CHECK(oracle::max_abs(partial_trace(m, na, nb, Subsystem::B) - oracle::trace_out_a(m, na, nb)) < 1e-14);
  }
}

TEST_CASE("partial trace of a product returns the factors") {
  Rng rng = make_rng(3);
  const DensityMatrix r = random_density(2, 2, rng);
  const DensityMatrix s = random_density(3, 2, rng);
  const BipartiteState p = product_state(r, s);
  CHECK(oracle::max_abs(partial_trace(p, Subsystem::A).matrix() - r.matrix()) < 1e-13);
  CHECK(oracle::max_abs(partial_trace(p, Subsystem::B).matrix() - s.matrix()) < 1e-13);
}

TEST_CASE("DensityMatrix names the violated invariant") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = Complex(0.1, 0.0);
  try {
    DensityMatrix bad(m);
    FAIL("accepted a non-Hermitian matrix");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "Hermitian");
    CHECK(e.residual() == doctest::Approx(0.1));
  }
  try {
    DensityMatrix bad(ComplexMatrix::Identity(2, 2));
    FAIL("accepted trace 2");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "unit trace");
    CHECK(e.residual() == doctest::Approx(1.0));
  }
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  try {
    DensityMatrix bad(neg);
    FAIL("accepted a negative eigenvalue");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "positive semidefinite");
    CHECK(e.residual() == doctest::Approx(0.2));
  }
}

TEST_CASE("DensityMatrix tolerates rounding at the 1e-10 scale") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 0) += 1e-12;
  CHECK_NOTHROW(DensityMatrix{m});
}

TEST_CASE("rank counts eigenvalues above the rank tolerance") {
  Rng rng = make_rng(4);
  for (Index r = 1; r <= 4; ++r) {
    CHECK(random_density(4, r, rng).rank() == r);
  }
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 - 5e-10;
  m(1, 1) = 5e-10;
  CHECK(DensityMatrix(m).rank() == 1);
}

TEST_CASE("BipartiteState rejects mismatched dimensions") {
  CHECK_THROWS_AS(BipartiteState(2, 3, DensityMatrix::maximally_mixed(4)), DimensionError);
  CHECK_THROWS_AS(BipartiteState(1, 4, DensityMatrix::maximally_mixed(4)), DimensionError);
}

TEST_CASE("eigh returns phase-fixed ascending eigenpairs") {
  Rng rng = make_rng(5);
  const ComplexMatrix m = random_density(3, 3, rng).matrix();
  const Eigensystem es = eigh(m);
  for (Index i = 0; i + 1 < es.values.size(); ++i) {
    CHECK(es.values(i) <= es.values(i + 1));
  }
  const ComplexMatrix back = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  CHECK(oracle::max_abs(back - m) < 1e-13);
  for (Index k = 0; k < 3; ++k) {
    CHECK(std::abs(es.vectors(0, k).imag()) < 1e-14);
    CHECK(es.vectors(0, k).real() > 0);
  }
}

TEST_CASE("Bell and Werner states match their entrywise definitions") {
  CHECK(oracle::max_abs(werner_state(0.3).matrix() - oracle::werner(0.3)) < 1e-15);
  CHECK(oracle::max_abs(werner_state(1.0).matrix() - oracle::werner(1.0)) < 1e-15);
  const ComplexMatrix bell = bell_state().matrix();
  CHECK(bell(0, 0).real() == doctest::Approx(0.5));
  CHECK(bell(3, 3).real() == doctest::Approx(0.5));
  CHECK(bell(0, 3).real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(werner_state(1.5), std::invalid_argument);
  CHECK_THROWS_AS(werner_state(-0.1), std::invalid_argument);
}

TEST_CASE("purification reproduces the state with ancilla dimension equal to the rank") {
  Rng rng = make_rng(6);
  for (Index r = 1; r <= 4; ++r) {
    const DensityMatrix rho = random_density(4, r, rng);
    const PureState psi = purify(rho);
    CHECK(psi.n_b() == r);
    CHECK(std::abs(psi.amplitudes().norm() - 1.0) < 1e-13);
    const ComplexMatrix full = psi.amplitudes() * psi.amplitudes().adjoint();
    CHECK(oracle::max_abs(oracle::trace_out_b(full, 4, r) - rho.matrix()) < 1e-13);
  }
}

TEST_CASE("Schmidt decomposition") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const SchmidtDecomposition s = schmidt(PureState(2, 2, bell));
  REQUIRE(s.rank() == 2);
  CHECK(s.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)));

  Rng rng = make_rng(7);
  ComplexVector v = ginibre_matrix(6, 1, rng).col(0);
  v.normalize();
  const SchmidtDecomposition t = schmidt(PureState(2, 3, v));
  CHECK((t.reassemble() - v).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(t.coefficients.squaredNorm() == doctest::Approx(1.0));
  // squared coefficients are the spectrum of the reduced state
  const ComplexMatrix red = oracle::trace_out_b(v * v.adjoint(), 2, 3);
  std::vector<double> sp = oracle::spectrum(red);
  std::sort(sp.rbegin(), sp.rend());
  for (Index i = 0; i < t.rank(); ++i) {
    CHECK(t.coefficients(i) * t.coefficients(i) == doctest::Approx(sp[static_cast<std::size_t>(i)]));
  }
}

TEST_CASE("PureState rejects unnormalised amplitudes") {
  CHECK_THROWS_AS(PureState(2, 2, ComplexVector::Ones(4)), InvariantViolation);
  CHECK_THROWS_AS(PureState(2, 2, ComplexVector::Ones(3)), DimensionError);
}

TEST_CASE("random generators are deterministic per seed") {
  Rng a = make_rng(11, 3);
  Rng b = make_rng(11, 3);
  Rng c = make_rng(11, 4);
  const ComplexMatrix ua = random_unitary(3, a);
  CHECK(oracle::max_abs(ua - random_unitary(3, b)) == 0.0);
  CHECK(oracle::max_abs(ua - random_unitary(3, c)) > 1e-3);
  CHECK(oracle::max_abs(ua.adjoint() * ua - ComplexMatrix::Identity(3, 3)) < 1e-13);
  CHECK(oracle::max_abs(ginibre_state(2, 3, 2, 9).matrix() - ginibre_state(2, 3, 2, 9).matrix()) == 0.0);
  CHECK(ginibre_state(2, 3, 2, 9).state().rank() == 2);
}

TEST_CASE("classical_state validates its ingredients") {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const std::vector<DensityMatrix> rb{DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(2)};
  CHECK_NOTHROW(classical_state({0.5, 0.5}, id, rb));
  CHECK_THROWS(classical_state({0.5, 0.6}, id, rb));
  CHECK_THROWS(classical_state({0.5, 0.5}, 2.0 * id, rb));
  CHECK_THROWS(classical_state({0.5, 0.5, 0.0}, id, rb));
}

TEST_CASE("make_state dispatches on the kind") {
  CHECK(oracle::max_abs(make_state(BellKind{}).matrix() - bell_state().matrix()) == 0.0);
  CHECK(oracle::max_abs(make_state(WernerKind{0.4}).matrix() - oracle::werner(0.4)) < 1e-15);
  const BipartiteState g = make_state(GinibreKind{3, 2, 3}, 4);
  CHECK(g.n_a() == 3);
  CHECK(g.state().rank() == 3);
}

TEST_CASE("random_classical_classical_state is diagonal in a product basis") {
  Rng rng = make_rng(12);
  const BipartiteState s = random_classical_classical_state(2, 3, rng);
  CHECK(s.state().rank() == 6);
  CHECK(s.n_b() == 3);
}
