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

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace discordium {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every module.
namespace tol {
inline constexpr double kState = 1e-10;       // Hermiticity, positivity, trace
inline constexpr double kRank = 1e-9;         // eigenvalues at or below count as zero
inline constexpr double kEntropyFloor = 1e-15;
inline constexpr double kOutcome = 1e-12;     // dropped measurement outcomes / branches
inline constexpr double kNorm = 1e-12;        // pure-state normalisation
}  // namespace tol

/// Raised when an object fails one of its construction invariants. The message
/// names the invariant and the measured residual.
class InvariantViolation : public std::invalid_argument {
 public:
  InvariantViolation(const std::string& invariant, double residual);
  const std::string& invariant() const noexcept { return invariant_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string invariant_;
  double residual_;
};

/// Raised on shape mismatches between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Subsystem { A, B };

/// Ascending eigenvalues with unitary eigenvectors in the columns.
struct Eigensystem {
  RealVector values;
  ComplexMatrix vectors;
};

/// Hermitian eigendecomposition of (M + M^dagger)/2. Each eigenvector is phase
/// fixed so that its first component with magnitude above 1e-12 is real positive.
Eigensystem eigh(const ComplexMatrix& m);

/// Kronecker product, A-major: (A (x) B)(a*nb + b, a'*nb + b') = A(a,a') B(b,b').
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a raw (n_a*n_b)-square matrix; `keep` names the factor left over.
ComplexMatrix partial_trace(const ComplexMatrix& m, Index n_a, Index n_b, Subsystem keep);

/// A validated density operator. The stored matrix is the Hermitian part of the input,
/// and its eigensystem is computed once at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);

  /// |psi><psi| for a unit vector psi.
  static DensityMatrix from_pure(const ComplexVector& psi);
  /// Identity over dim.
  static DensityMatrix maximally_mixed(Index dim);

  Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Eigensystem& eigensystem() const noexcept { return eig_; }
  const RealVector& eigenvalues() const noexcept { return eig_.values; }
  /// Number of eigenvalues above tol::kRank.
  Index rank() const noexcept { return rank_; }

 private:
  ComplexMatrix matrix_;
  Eigensystem eig_;
  Index rank_ = 0;
};

/// A density matrix on H^A (x) H^B with the A-major index convention.
class BipartiteState {
 public:
  BipartiteState(Index n_a, Index n_b, DensityMatrix state);
  BipartiteState(Index n_a, Index n_b, const ComplexMatrix& m);

  Index n_a() const noexcept { return n_a_; }
  Index n_b() const noexcept { return n_b_; }
  const DensityMatrix& state() const noexcept { return state_; }
  const ComplexMatrix& matrix() const noexcept { return state_.matrix(); }

 private:
  Index n_a_;
  Index n_b_;
  DensityMatrix state_;
};

DensityMatrix partial_trace(const BipartiteState& rho, Subsystem keep);

/// Unit vector on an n_a x n_b product space (either factor may be 1).
class PureState {
 public:
  PureState(Index n_a, Index n_b, ComplexVector amplitudes);

  Index n_a() const noexcept { return n_a_; }
  Index n_b() const noexcept { return n_b_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  DensityMatrix density() const { return DensityMatrix::from_pure(amplitudes_); }

 private:
  Index n_a_;
  Index n_b_;
  ComplexVector amplitudes_;
};

struct SchmidtDecomposition {
  RealVector coefficients;     // sqrt(p_i), nonincreasing, positive
  ComplexMatrix left_vectors;  // columns |psi_i^A>
  ComplexMatrix right_vectors; // columns |psi_i^B>
  Index rank() const noexcept { return coefficients.size(); }
  /// sum_i c_i |l_i> (x) |r_i>
  ComplexVector reassemble() const;
};

/// Purification sum_i sqrt(p_i) |e_i> (x) |i> over the eigenvalues above tol::kRank;
/// the ancilla dimension equals rho.rank().
PureState purify(const DensityMatrix& rho);

/// Schmidt form from the SVD of the amplitudes reshaped to n_a x n_b.
SchmidtDecomposition schmidt(const PureState& psi);

// ---------------------------------------------------------------------------
// Random numbers and state generators
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream); streams split restarts and trials.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// n x m matrix of independent complex normals (re and im each N(0,1)).
ComplexMatrix ginibre_matrix(Index rows, Index cols, Rng& rng);
/// Haar unitary via QR of a Ginibre matrix with the phase of R's diagonal removed.
ComplexMatrix random_unitary(Index n, Rng& rng);
/// G G^dagger / tr(G G^dagger) with G an n x rank Ginibre matrix.
DensityMatrix random_density(Index n, Index rank, Rng& rng);

struct BellKind {};
struct WernerKind {
  double p = 0.0;
};
struct ClassicalKind {
  std::vector<double> probs;
  ComplexMatrix basis;                  // columns |alpha>
  std::vector<DensityMatrix> rho_b;     // conditional states on B
};
struct ProductKind {
  DensityMatrix rho;
  DensityMatrix sigma;
};
struct GinibreKind {
  Index n_a = 2;
  Index n_b = 2;
  Index rank = 4;
};
using StateKind = std::variant<BellKind, WernerKind, ClassicalKind, ProductKind, GinibreKind>;

/// Builds one of the standard states; only the Ginibre kind consumes `seed`.
BipartiteState make_state(const StateKind& kind, std::uint64_t seed = 0);

BipartiteState bell_state();
/// p |Psi^-><Psi^-| + (1-p) I/4.
BipartiteState werner_state(double p);
/// sum_a p_a |a><a| (x) rho_a^B.
BipartiteState classical_state(const std::vector<double>& probs, const ComplexMatrix& basis,
                               const std::vector<DensityMatrix>& rho_b);
BipartiteState product_state(const DensityMatrix& rho, const DensityMatrix& sigma);
BipartiteState ginibre_state(Index n_a, Index n_b, Index rank, std::uint64_t seed);

/// Random classical state: Dirichlet-like weights, Haar basis on A, Ginibre states on B.
BipartiteState random_classical_state(Index n_a, Index n_b, Rng& rng);
/// sum_ab p_ab |a><a| (x) |b><b| with independent Haar bases on A and on B.
BipartiteState random_classical_classical_state(Index n_a, Index n_b, Rng& rng);
/// Tensor product of two independent full-rank Ginibre states.
BipartiteState random_product_state(Index n_a, Index n_b, Rng& rng);

}  // namespace discordium
