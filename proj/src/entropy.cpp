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

#include "discordium/entropy.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace discordium {

namespace {

inline double plogp(double p) { return p > tol::kEntropyFloor ? -p * std::log2(p) : 0.0; }

}  // namespace

double shannon_bits(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) {
    s += plogp(p);
  }
  return s;
}

double normalized_entropy(const ComplexMatrix& m) {
  const double t = m.trace().real();
  if (t <= tol::kEntropyFloor) {
    return 0.0;
  }
  if (m.rows() == 1) {
    return 0.0;
  }
  if (m.rows() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    const double hi = (0.5 * t + half_gap) / t;
    const double lo = std::max(0.0, 1.0 - hi);
    return plogp(hi) + plogp(lo);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
    s += plogp(solver.eigenvalues()(i) / t);
  }
  return s;
}

Bits von_neumann(const DensityMatrix& rho) {
  const RealVector& ev = rho.eigenvalues();
  const double s = shannon_bits(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
  return Bits{std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())))};
}

Bits relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionError("relative_entropy: dimension mismatch");
  }
  const Eigensystem& es = sigma.eigensystem();
  double cross = 0.0;  // tr(rho log2 sigma)
  for (Index k = 0; k < es.values.size(); ++k) {
    const ComplexVector v = es.vectors.col(k);
    const double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    if (es.values(k) <= tol::kRank) {
      if (weight > tol::kRank) {
        return Bits::infinity();
      }
      continue;
    }
    cross += weight * std::log2(es.values(k));
  }
  return Bits{-von_neumann(rho).value - cross};
}

Bits conditional_entropy(const BipartiteState& rho) {
  return von_neumann(rho.state()) - von_neumann(partial_trace(rho, Subsystem::A));
}

Bits mutual_information(const BipartiteState& rho) {
  return von_neumann(partial_trace(rho, Subsystem::A)) + von_neumann(partial_trace(rho, Subsystem::B)) -
         von_neumann(rho.state());
}

}  // namespace discordium
