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

#include "discordium/measure.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace discordium {

namespace {

double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

// Normalises an unnormalised branch state. Small-probability branches amplify
// rounding, so the spectrum is clipped to be nonnegative before validation.
DensityMatrix normalized_branch(const ComplexMatrix& block, double p) {
  ComplexMatrix m = 0.5 * (block + block.adjoint()) / p;
  Eigensystem es = eigh(m);
  if (es.values.minCoeff() < 0.0) {
    es.values = es.values.cwiseMax(0.0);
    es.values /= es.values.sum();
    m = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  } else {
    m /= m.trace().real();
  }
  return DensityMatrix(m);
}

}  // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw std::invalid_argument("Kraus set must contain at least one operator");
  }
  dim_ = operators_.front().cols();
  out_dim_ = operators_.front().rows();
  for (const auto& a : operators_) {
    if (a.cols() != dim_ || a.rows() != out_dim_) {
      throw DimensionError("Kraus operators differ in shape");
    }
  }
  const double res = completeness_residual(*this);
  if (res > tol::kState) {
    throw InvariantViolation("Kraus completeness", res);
  }
}

double completeness_residual(const KrausSet& m) {
  ComplexMatrix sum = ComplexMatrix::Zero(m.dim(), m.dim());
  for (const auto& a : m.operators()) {
    sum += a.adjoint() * a;
  }
  return (sum - ComplexMatrix::Identity(m.dim(), m.dim())).cwiseAbs().maxCoeff();
}

ProjectiveBasis::ProjectiveBasis(ComplexMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols()) {
    throw DimensionError("projective basis must be square");
  }
  const double res = unitarity_residual(basis_);
  if (res > tol::kState) {
    throw InvariantViolation("basis unitarity", res);
  }
}

ProjectiveBasis ProjectiveBasis::computational(Index dim) {
  return ProjectiveBasis(ComplexMatrix::Identity(dim, dim));
}

KrausSet ProjectiveBasis::kraus() const {
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(dim()));
  for (Index k = 0; k < dim(); ++k) {
    ops.emplace_back(basis_.col(k) * basis_.col(k).adjoint());
  }
  return KrausSet(std::move(ops));
}

RankOnePOVM::RankOnePOVM(Index dim, const std::vector<ComplexVector>& vectors) : dim_(dim) {
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      throw DimensionError("POVM vector length differs from dim");
    }
    const double w = v.squaredNorm();
    if (w <= tol::kOutcome) {
      continue;
    }
    vectors_.push_back(v);
    weights_.push_back(w);
    sum += v * v.adjoint();
  }
  const double res = (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (res > tol::kState) {
    throw InvariantViolation("rank-one POVM completeness", res);
  }
}

KrausSet RankOnePOVM::kraus() const {
  std::vector<ComplexMatrix> ops;
  ops.reserve(vectors_.size());
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    ops.emplace_back(vectors_[k] * vectors_[k].adjoint() / std::sqrt(weights_[k]));
  }
  return KrausSet(std::move(ops));
}

NeumarkBasis::NeumarkBasis(Index n_a, ComplexMatrix extension_basis)
    : n_a_(n_a), basis_(std::move(extension_basis)) {
  if (basis_.rows() != basis_.cols()) {
    throw DimensionError("Neumark basis must be square");
  }
  if (basis_.rows() < n_a) {
    throw DimensionError("Neumark extension dimension below n_A");
  }
  const double res = unitarity_residual(basis_);
  if (res > tol::kState) {
    throw InvariantViolation("extension basis unitarity", res);
  }
}

NeumarkBasis NeumarkBasis::embed(const ProjectiveBasis& basis, Index n) {
  if (n < basis.dim()) {
    throw DimensionError("embedding dimension below basis dimension");
  }
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  u.topLeftCorner(basis.dim(), basis.dim()) = basis.basis();
  return NeumarkBasis(basis.dim(), std::move(u));
}

ComplexMatrix conditional_block(const ComplexMatrix& rho, Index n_a, Index n_b, const ComplexMatrix& effect) {
  ComplexMatrix out = ComplexMatrix::Zero(n_b, n_b);
  for (Index a = 0; a < n_a; ++a) {
    for (Index ap = 0; ap < n_a; ++ap) {
      const Complex e = effect(a, ap);
      if (e != Complex(0.0, 0.0)) {
        out += e * rho.block(ap * n_b, a * n_b, n_b, n_b);
      }
    }
  }
  return out;
}

ComplexMatrix rank_one_block(const ComplexMatrix& rho, Index n_a, Index n_b,
                             const Eigen::Ref<const ComplexVector>& gamma) {
  ComplexMatrix out = ComplexMatrix::Zero(n_b, n_b);
  for (Index ap = 0; ap < n_a; ++ap) {
    const Complex left = std::conj(gamma(ap));
    for (Index a = 0; a < n_a; ++a) {
      out += (left * gamma(a)) * rho.block(ap * n_b, a * n_b, n_b, n_b);
    }
  }
  return out;
}

BipartiteState apply_one_sided(const BipartiteState& rho, const KrausSet& m) {
  if (m.dim() != rho.n_a()) {
    throw DimensionError("apply_one_sided: measurement dimension differs from n_A");
  }
  const ComplexMatrix id_b = ComplexMatrix::Identity(rho.n_b(), rho.n_b());
  const Index out = m.out_dim() * rho.n_b();
  ComplexMatrix acc = ComplexMatrix::Zero(out, out);
  for (const auto& a : m.operators()) {
    const ComplexMatrix k = tensor_product(a, id_b);
    acc += k * rho.matrix() * k.adjoint();
  }
  return BipartiteState(m.out_dim(), rho.n_b(), acc);
}

ConditionalEnsemble branch_ensemble(const BipartiteState& rho, const KrausSet& m) {
  if (m.dim() != rho.n_a()) {
    throw DimensionError("branch_ensemble: measurement dimension differs from n_A");
  }
  ConditionalEnsemble ens;
  for (const auto& a : m.operators()) {
    const ComplexMatrix block = conditional_block(rho.matrix(), rho.n_a(), rho.n_b(), ComplexMatrix(a.adjoint() * a));
    const double p = block.trace().real();
    if (p <= tol::kOutcome) {
      continue;
    }
    ens.branches.push_back(Branch{p, normalized_branch(block, p)});
  }
  return ens;
}

RankOnePOVM from_neumark(const NeumarkBasis& nb) {
  std::vector<ComplexVector> vectors;
  vectors.reserve(static_cast<std::size_t>(nb.extension_dim()));
  for (Index k = 0; k < nb.extension_dim(); ++k) {
    vectors.emplace_back(nb.extension_basis().col(k).head(nb.n_a()));
  }
  return RankOnePOVM(nb.n_a(), vectors);
}

NeumarkBasis neumark_extension(const RankOnePOVM& povm) {
  const Index n_a = povm.dim();
  const Index n = static_cast<Index>(povm.size());
  // rows of v are orthonormal because sum |gamma><gamma| = I
  ComplexMatrix v(n_a, n);
  for (Index k = 0; k < n; ++k) {
    v.col(k) = povm.vectors()[static_cast<std::size_t>(k)];
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ComplexMatrix(v.adjoint()));
  const ComplexMatrix q = qr.householderQ();
  ComplexMatrix u(n, n);
  u.topRows(n_a) = v;
  if (n > n_a) {
    u.bottomRows(n - n_a) = q.rightCols(n - n_a).adjoint();
  }
  return NeumarkBasis(n_a, std::move(u));
}

RankOnePOVM rank_one_refine(const KrausSet& m) {
  std::vector<ComplexVector> vectors;
  for (const auto& a : m.operators()) {
    const Eigensystem es = eigh(a.adjoint() * a);
    for (Index j = 0; j < es.values.size(); ++j) {
      if (es.values(j) > tol::kOutcome) {
        vectors.emplace_back(std::sqrt(es.values(j)) * es.vectors.col(j));
      }
    }
  }
  return RankOnePOVM(m.dim(), vectors);
}

KrausSet randomizing_measurement(Index n_a) {
  if (n_a < 2) {
    throw std::invalid_argument("randomizing_measurement: n_A must be at least 2");
  }
  ComplexMatrix shift = ComplexMatrix::Zero(n_a, n_a);
  ComplexMatrix clock = ComplexMatrix::Zero(n_a, n_a);
  for (Index j = 0; j < n_a; ++j) {
    shift((j + 1) % n_a, j) = 1.0;
    clock(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_a));
  }
  std::vector<ComplexMatrix> ops;
  ComplexMatrix xa = ComplexMatrix::Identity(n_a, n_a);
  for (Index a = 0; a < n_a; ++a) {
    ComplexMatrix zb = ComplexMatrix::Identity(n_a, n_a);
    for (Index b = 0; b < n_a; ++b) {
      ops.emplace_back(xa * zb / static_cast<double>(n_a));
      zb = zb * clock;
    }
    xa = xa * shift;
  }
  return KrausSet(std::move(ops));
}

BipartiteState two_sided_apply(const BipartiteState& rho, const NeumarkBasis& nb_a, const NeumarkBasis& nb_b) {
  if (nb_a.n_a() != rho.n_a() || nb_b.n_a() != rho.n_b()) {
    throw DimensionError("two_sided_apply: Neumark bases do not match the subsystem dimensions");
  }
  const KrausSet ka = from_neumark(nb_a).kraus();
  const KrausSet kb = from_neumark(nb_b).kraus();
  const Index d = rho.n_a() * rho.n_b();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (const auto& a : ka.operators()) {
    for (const auto& b : kb.operators()) {
      const ComplexMatrix k = tensor_product(a, b);
      acc += k * rho.matrix() * k.adjoint();
    }
  }
  return BipartiteState(rho.n_a(), rho.n_b(), acc);
}

}  // namespace discordium
