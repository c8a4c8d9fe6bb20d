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

#include "discordium/qmat.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace discordium {

namespace {

std::string describe(const std::string& invariant, double residual) {
  std::ostringstream os;
  os.precision(3);
  os << "invariant violated: " << invariant << " (residual " << std::scientific << residual << ")";
  return os.str();
}

void fix_column_phases(ComplexMatrix& v) {
  for (Index j = 0; j < v.cols(); ++j) {
    for (Index i = 0; i < v.rows(); ++i) {
      const double mag = std::abs(v(i, j));
      if (mag > 1e-12) {
        v.col(j) *= std::conj(v(i, j)) / mag;
        v(i, j) = Complex(std::abs(v(i, j)), 0.0);
        break;
      }
    }
  }
}

double unitarity_residual(const ComplexMatrix& u) {
  const ComplexMatrix g = u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

}  // namespace

InvariantViolation::InvariantViolation(const std::string& invariant, double residual)
    : std::invalid_argument(describe(invariant, residual)), invariant_(invariant), residual_(residual) {}

Eigensystem eigh(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("eigh: matrix is not square");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigensolver failed to converge");
  }
  Eigensystem out{solver.eigenvalues(), solver.eigenvectors()};
  fix_column_phases(out.vectors);
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Index n_a, Index n_b, Subsystem keep) {
  if (m.rows() != n_a * n_b || m.cols() != n_a * n_b) {
    throw DimensionError("partial_trace: matrix size does not match n_a * n_b");
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(n_a, n_a);
    for (Index a = 0; a < n_a; ++a) {
      for (Index ap = 0; ap < n_a; ++ap) {
        out(a, ap) = m.block(a * n_b, ap * n_b, n_b, n_b).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(n_b, n_b);
  for (Index a = 0; a < n_a; ++a) {
    out += m.block(a * n_b, a * n_b, n_b, n_b);
  }
  return out;
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::kState) {
    throw InvariantViolation("Hermitian", herm);
  }
  matrix_ = 0.5 * (m + m.adjoint());
  const double trace_err = std::abs(matrix_.trace().real() - 1.0);
  if (trace_err > tol::kState) {
    throw InvariantViolation("unit trace", trace_err);
  }
  eig_ = eigh(matrix_);
  if (eig_.values(0) < -tol::kState) {
    throw InvariantViolation("positive semidefinite", -eig_.values(0));
  }
  rank_ = (eig_.values.array() > tol::kRank).count();
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi) {
  const double norm_err = std::abs(psi.squaredNorm() - 1.0);
  if (norm_err > tol::kNorm) {
    throw InvariantViolation("unit norm", norm_err);
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

BipartiteState::BipartiteState(Index n_a, Index n_b, DensityMatrix state)
    : n_a_(n_a), n_b_(n_b), state_(std::move(state)) {
  if (n_a < 2 || n_b < 2) {
    throw DimensionError("bipartite state needs n_A >= 2 and n_B >= 2");
  }
  if (n_a * n_b != state_.dim()) {
    throw DimensionError("dims/matrix mismatch");
  }
}

BipartiteState::BipartiteState(Index n_a, Index n_b, const ComplexMatrix& m)
    : BipartiteState(n_a, n_b, [&] {
        if (m.rows() != n_a * n_b || m.cols() != n_a * n_b) {
          throw DimensionError("dims/matrix mismatch");
        }
        return DensityMatrix(m);
      }()) {}

DensityMatrix partial_trace(const BipartiteState& rho, Subsystem keep) {
  return DensityMatrix(partial_trace(rho.matrix(), rho.n_a(), rho.n_b(), keep));
}

PureState::PureState(Index n_a, Index n_b, ComplexVector amplitudes)
    : n_a_(n_a), n_b_(n_b), amplitudes_(std::move(amplitudes)) {
  if (n_a < 1 || n_b < 1 || amplitudes_.size() != n_a * n_b) {
    throw DimensionError("pure state: amplitude count does not match n_a * n_b");
  }
  const double norm_err = std::abs(amplitudes_.squaredNorm() - 1.0);
  if (norm_err > tol::kNorm) {
    throw InvariantViolation("unit norm", norm_err);
  }
}

ComplexVector SchmidtDecomposition::reassemble() const {
  const Index na = left_vectors.rows();
  const Index nb = right_vectors.rows();
  ComplexVector out = ComplexVector::Zero(na * nb);
  for (Index i = 0; i < rank(); ++i) {
    for (Index a = 0; a < na; ++a) {
      out.segment(a * nb, nb) += coefficients(i) * left_vectors(a, i) * right_vectors.col(i);
    }
  }
  return out;
}

PureState purify(const DensityMatrix& rho) {
  const Eigensystem& eig = rho.eigensystem();
  const Index d = rho.dim();
  const Index r = rho.rank();
  // eigenvalues ascend, so the kept ones are the last r
  ComplexVector amp = ComplexVector::Zero(d * r);
  for (Index k = 0; k < r; ++k) {
    const Index src = d - 1 - k;
    const double w = std::sqrt(std::max(0.0, eig.values(src)));
    for (Index i = 0; i < d; ++i) {
      amp(i * r + k) = w * eig.vectors(i, src);
    }
  }
  amp.normalize();
  return PureState(d, r, std::move(amp));
}

SchmidtDecomposition schmidt(const PureState& psi) {
  const Index na = psi.n_a();
  const Index nb = psi.n_b();
  ComplexMatrix m(na, nb);
  for (Index a = 0; a < na; ++a) {
    for (Index b = 0; b < nb; ++b) {
      m(a, b) = psi.amplitudes()(a * nb + b);
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  Index rank = 0;
  while (rank < s.size() && s(rank) > 1e-14) {
    ++rank;
  }
  SchmidtDecomposition out;
  out.coefficients = s.head(rank);
  out.left_vectors = svd.matrixU().leftCols(rank);
  // M = U S V^dagger, so amplitude(a,b) = sum_i s_i U(a,i) conj(V(b,i))
  out.right_vectors = svd.matrixV().leftCols(rank).conjugate();
  return out;
}

// ---------------------------------------------------------------------------

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x5eedu};
  return Rng(seq);
}

ComplexMatrix ginibre_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_unitary(Index n, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) {
      q.col(j) *= d / mag;
    }
  }
  return q;
}

DensityMatrix random_density(Index n, Index rank, Rng& rng) {
  if (rank < 1 || rank > n) {
    throw std::invalid_argument("random_density: rank outside [1, n]");
  }
  const ComplexMatrix g = ginibre_matrix(n, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(m);
}

BipartiteState bell_state() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return BipartiteState(2, 2, DensityMatrix(psi * psi.adjoint()));
}

BipartiteState werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner: p outside [0, 1]");
  }
  ComplexVector singlet = ComplexVector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  const ComplexMatrix m =
      p * singlet * singlet.adjoint() + (1.0 - p) * ComplexMatrix::Identity(4, 4) / 4.0;
  return BipartiteState(2, 2, m);
}

BipartiteState classical_state(const std::vector<double>& probs, const ComplexMatrix& basis,
                               const std::vector<DensityMatrix>& rho_b) {
  const Index n_a = basis.rows();
  if (basis.cols() != n_a || static_cast<Index>(probs.size()) != n_a ||
      static_cast<Index>(rho_b.size()) != n_a) {
    throw std::invalid_argument("classical: need one probability and one B-state per basis vector");
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > tol::kState) {
    throw std::invalid_argument("classical: probabilities do not sum to 1");
  }
  for (double p : probs) {
    if (p < 0.0) {
      throw std::invalid_argument("classical: negative probability");
    }
  }
  const double unit = unitarity_residual(basis);
  if (unit > tol::kState) {
    throw InvariantViolation("basis unitarity", unit);
  }
  const Index n_b = rho_b.front().dim();
  ComplexMatrix m = ComplexMatrix::Zero(n_a * n_b, n_a * n_b);
  for (Index a = 0; a < n_a; ++a) {
    if (rho_b[a].dim() != n_b) {
      throw DimensionError("classical: conditional states differ in dimension");
    }
    const ComplexVector v = basis.col(a);
    m += probs[a] * tensor_product(v * v.adjoint(), rho_b[a].matrix());
  }
  return BipartiteState(n_a, n_b, m);
}

BipartiteState product_state(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return BipartiteState(rho.dim(), sigma.dim(), tensor_product(rho.matrix(), sigma.matrix()));
}

BipartiteState ginibre_state(Index n_a, Index n_b, Index rank, std::uint64_t seed) {
  if (rank < 1 || rank > n_a * n_b) {
    throw std::invalid_argument("ginibre: rank outside [1, n_A * n_B]");
  }
  Rng rng = make_rng(seed);
  return BipartiteState(n_a, n_b, random_density(n_a * n_b, rank, rng));
}

BipartiteState make_state(const StateKind& kind, std::uint64_t seed) {
  struct Visitor {
    std::uint64_t seed;
    BipartiteState operator()(const BellKind&) const { return bell_state(); }
    BipartiteState operator()(const WernerKind& k) const { return werner_state(k.p); }
    BipartiteState operator()(const ClassicalKind& k) const {
      return classical_state(k.probs, k.basis, k.rho_b);
    }
    BipartiteState operator()(const ProductKind& k) const { return product_state(k.rho, k.sigma); }
    BipartiteState operator()(const GinibreKind& k) const {
      return ginibre_state(k.n_a, k.n_b, k.rank, seed);
    }
  };
  return std::visit(Visitor{seed}, kind);
}

BipartiteState random_classical_state(Index n_a, Index n_b, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> probs(static_cast<std::size_t>(n_a));
  for (double& p : probs) {
    p = expo(rng);
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double& p : probs) {
    p /= total;
  }
  // exact renormalisation so the sum check cannot trip on rounding
  probs.back() = 1.0 - std::accumulate(probs.begin(), probs.end() - 1, 0.0);
  const ComplexMatrix basis = random_unitary(n_a, rng);
  std::vector<DensityMatrix> rho_b;
  rho_b.reserve(probs.size());
  for (Index a = 0; a < n_a; ++a) {
    rho_b.push_back(random_density(n_b, n_b, rng));
  }
  return classical_state(probs, basis, rho_b);
}

BipartiteState random_classical_classical_state(Index n_a, Index n_b, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RealVector probs(n_a * n_b);
  for (Index k = 0; k < probs.size(); ++k) {
    probs(k) = expo(rng);
  }
  probs /= probs.sum();
  const ComplexMatrix ua = random_unitary(n_a, rng);
  const ComplexMatrix ub = random_unitary(n_b, rng);
  const ComplexMatrix u = tensor_product(ua, ub);
  return BipartiteState(n_a, n_b, ComplexMatrix(u * probs.cast<Complex>().asDiagonal() * u.adjoint()));
}

BipartiteState random_product_state(Index n_a, Index n_b, Rng& rng) {
  const DensityMatrix rho = random_density(n_a, n_a, rng);
  const DensityMatrix sigma = random_density(n_b, n_b, rng);
  return product_state(rho, sigma);
}

}  // namespace discordium
