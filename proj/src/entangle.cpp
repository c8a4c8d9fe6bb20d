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

#include "discordium/entangle.hpp"

#include <algorithm>
#include <cmath>

#include "discordium/discord.hpp"

namespace discordium {

namespace {

ComplexMatrix reduced_left(const ComplexVector& phi, Index n_left, Index n_right) {
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> mat(
      phi.data(), n_left, n_right);
  return mat * mat.adjoint();
}

}  // namespace

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  const double cc = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - cc * cc)));
}

double concurrence_2q(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionError("concurrence_2q: expected a two-qubit (4 x 4) state");
  }
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const ComplexMatrix tilde = yy * rho.matrix().conjugate() * yy;
  // sqrt(rho) tilde sqrt(rho) is Hermitian and shares its spectrum with rho tilde
  // eigenvalues at the rounding floor are zeroed before square roots amplify them
  constexpr double kNoise = 1e-14;
  auto floored_sqrt = [](const RealVector& v) {
    return RealVector(v.unaryExpr([](double x) { return x > kNoise ? std::sqrt(x) : 0.0; }));
  };
  const Eigensystem& es = rho.eigensystem();
  const ComplexMatrix root = es.vectors * floored_sqrt(es.values).cast<Complex>().asDiagonal() * es.vectors.adjoint();
  RealVector ev = floored_sqrt(eigh(root * tilde * root).values);
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<>());
  return std::clamp(ev(0) - ev(1) - ev(2) - ev(3), 0.0, 1.0);
}

EntanglementResult eof_2q(const DensityMatrix& rho) {
  const double c = concurrence_2q(rho);
  EntanglementResult r;
  r.concurrence = c;
  r.eof = Bits{eof_from_concurrence(c)};
  r.method = EofMethod::Wootters;
  return r;
}

double decomposition_cost(const std::vector<ComplexVector>& vectors, Index n_left, Index n_right) {
  double total = 0.0;
  for (const auto& phi : vectors) {
    if (phi.size() != n_left * n_right) {
      throw DimensionError("decomposition_cost: vector length differs from n_left * n_right");
    }
    const ComplexMatrix red = reduced_left(phi, n_left, n_right);
    const double p = red.trace().real();
    if (p > tol::kOutcome) {
      total += p * normalized_entropy(red);
    }
  }
  return total;
}

EntanglementResult eof_via_decomposition(const DensityMatrix& rho, Index n_left, Index n_right, Index k,
                                         const OptimizerConfig& cfg) {
  if (n_left * n_right != rho.dim()) {
    throw DimensionError("eof_via_decomposition: n_left * n_right differs from the state dimension");
  }
  const Index r = rho.rank();
  if (k < r) {
    throw std::invalid_argument("eof_via_decomposition: K is smaller than rank(rho)");
  }
  const Eigensystem& es = rho.eigensystem();
  const Index d = rho.dim();
  // columns sqrt(p_i)|psi_i> for the r largest eigenvalues
  ComplexMatrix weighted(d, r);
  for (Index i = 0; i < r; ++i) {
    const Index src = d - 1 - i;
    weighted.col(i) = std::sqrt(std::max(0.0, es.values(src))) * es.vectors.col(src);
  }
  auto members = [&](const ComplexMatrix& u) {
    std::vector<ComplexVector> out;
    out.reserve(static_cast<std::size_t>(k));
    for (Index l = 0; l < k; ++l) {
      out.emplace_back(weighted * u.row(l).head(r).transpose());
    }
    return out;
  };
  OptimizationOutcome outcome = minimize(
      [&](const UnitaryParams& p) { return decomposition_cost(members(to_unitary(p)), n_left, n_right); }, k, cfg);

  EntanglementResult res;
  res.method = EofMethod::Decomposition;
  res.decomposition = to_unitary(outcome.best_params, k);
  res.eof = Bits{decomposition_cost(members(res.decomposition), n_left, n_right)};
  res.outcome = std::move(outcome);
  return res;
}

KoashiWinterReport koashi_winter_residual(const BipartiteState& rho, Index n, const OptimizerConfig& cfg) {
  if (rho.n_b() != 2) {
    throw std::invalid_argument("koashi_winter_residual: subsystem B must be a qubit");
  }
  if (rho.state().rank() > 2) {
    throw std::invalid_argument("koashi_winter_residual: rank(rho^AB) exceeds 2");
  }
  const Index na = rho.n_a();
  const PureState pure = purify(rho.state());
  // ancilla C padded to a qubit; amplitude index (a*2 + b)*2 + c = a*4 + (b*2 + c)
  ComplexVector psi = ComplexVector::Zero(na * 4);
  for (Index ab = 0; ab < na * 2; ++ab) {
    for (Index c = 0; c < pure.n_b(); ++c) {
      psi(ab * 2 + c) = pure.amplitudes()(ab * pure.n_b() + c);
    }
  }
  const ComplexMatrix full = psi * psi.adjoint();

  KoashiWinterReport rep{.projective_residual = std::nullopt,
                         .discord_p = std::nullopt,
                         .rho_bc = DensityMatrix(partial_trace(full, na, 4, Subsystem::B))};
  rep.eof_bc = eof_2q(rep.rho_bc).eof.value;
  rep.entropy_a = von_neumann(partial_trace(rho, Subsystem::A)).value;
  rep.entropy_ab = von_neumann(rho.state()).value;
  rep.rhs = rep.eof_bc + rep.entropy_a - rep.entropy_ab;

  const DiscordResult pe = discord_PE(rho, n, cfg);
  rep.discord_pe = pe.value.value;
  rep.residual = std::abs(rep.discord_pe - rep.rhs);

  // decomposition of rho^BC steered by the optimal measurement: phi_g = (<g| (x) I_BC)|psi>
  const ComplexMatrix gammas = pe.measurement.bases.front().topRows(na);
  std::vector<ComplexVector> induced;
  for (Index g = 0; g < gammas.cols(); ++g) {
    ComplexVector phi = ComplexVector::Zero(4);
    for (Index a = 0; a < na; ++a) {
      phi += std::conj(gammas(a, g)) * psi.segment(a * 4, 4);
    }
    induced.push_back(std::move(phi));
  }
  rep.induced_decomposition_cost = decomposition_cost(induced, 2, 2);

  if (na == 2) {
    const DiscordResult p = discord_P(rho, cfg);
    rep.discord_p = p.value.value;
    rep.projective_residual = std::abs(p.value.value - rep.rhs);
  }
  return rep;
}

}  // namespace discordium
