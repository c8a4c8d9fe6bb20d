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

#include <vector>

#include "discordium/qmat.hpp"

namespace discordium {

/// One-sided general measurement {A_alpha} with sum A^dagger A = I. Operators are
/// n_out x n_A; n_out = n_A except for callers that embed into a larger space.
class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  Index dim() const noexcept { return dim_; }
  Index out_dim() const noexcept { return out_dim_; }
  std::size_t size() const noexcept { return operators_.size(); }
  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }

 private:
  std::vector<ComplexMatrix> operators_;
  Index dim_ = 0;
  Index out_dim_ = 0;
};

/// Orthonormal basis {|alpha>} stored as the columns of a unitary.
class ProjectiveBasis {
 public:
  explicit ProjectiveBasis(ComplexMatrix basis);
  static ProjectiveBasis computational(Index dim);

  Index dim() const noexcept { return basis_.rows(); }
  const ComplexMatrix& basis() const noexcept { return basis_; }
  /// {|alpha><alpha|}
  KrausSet kraus() const;

 private:
  ComplexMatrix basis_;
};

/// Rank-one POVM: unnormalised vectors |gamma> with sum |gamma><gamma| = I.
/// Vectors with weight <gamma|gamma> at or below tol::kOutcome are dropped.
class RankOnePOVM {
 public:
  RankOnePOVM(Index dim, const std::vector<ComplexVector>& vectors);

  Index dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<ComplexVector>& vectors() const noexcept { return vectors_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// {|gamma><gamma| / sqrt(p_gamma)}
  KrausSet kraus() const;

 private:
  Index dim_;
  std::vector<ComplexVector> vectors_;
  std::vector<double> weights_;
};

/// Orthonormal basis {|gamma-bar>} of an N-dimensional direct-sum extension of H^A;
/// the first n_A coordinates of each column span the original space.
class NeumarkBasis {
 public:
  NeumarkBasis(Index n_a, ComplexMatrix extension_basis);
  /// Basis of H^N whose first n_A columns are the given projective basis (padded
  /// with zeros) and whose remaining columns are the new coordinate axes.
  static NeumarkBasis embed(const ProjectiveBasis& basis, Index n);

  Index n_a() const noexcept { return n_a_; }
  Index extension_dim() const noexcept { return basis_.rows(); }
  const ComplexMatrix& extension_basis() const noexcept { return basis_; }

 private:
  Index n_a_;
  ComplexMatrix basis_;
};

struct Branch {
  double probability;
  DensityMatrix rho_b;
};

/// Outcome probabilities with the normalised post-measurement states of B.
struct ConditionalEnsemble {
  std::vector<Branch> branches;
};

/// tr_A[(E (x) I_B) rho] for an operator E on H^A; this is the unnormalised B-state
/// left behind by any Kraus operator with A^dagger A = E.
ComplexMatrix conditional_block(const ComplexMatrix& rho, Index n_a, Index n_b, const ComplexMatrix& effect);
/// Rank-one form, (<gamma| (x) I) rho (|gamma> (x) I).
ComplexMatrix rank_one_block(const ComplexMatrix& rho, Index n_a, Index n_b,
                             const Eigen::Ref<const ComplexVector>& gamma);

/// sum_alpha (A_alpha (x) I) rho (A_alpha (x) I)^dagger
BipartiteState apply_one_sided(const BipartiteState& rho, const KrausSet& m);

/// Drops branches with probability at or below tol::kOutcome.
ConditionalEnsemble branch_ensemble(const BipartiteState& rho, const KrausSet& m);

/// Restricts each column of the extension basis to its first n_A entries.
RankOnePOVM from_neumark(const NeumarkBasis& nb);

/// Completes the POVM vectors to an orthonormal basis of H^n, n = number of vectors.
NeumarkBasis neumark_extension(const RankOnePOVM& povm);

/// Eigendecomposes each A^dagger A and emits sqrt(lambda_j)|v_j> for every
/// eigenvalue above tol::kOutcome, in eigh order.
RankOnePOVM rank_one_refine(const KrausSet& m);

/// The n_A^2 clock-and-shift unitaries X^a Z^b, each scaled by 1/n_A.
KrausSet randomizing_measurement(Index n_a);

/// Product measurement from_neumark(nb_a) (x) from_neumark(nb_b), applied as Kraus operators.
BipartiteState two_sided_apply(const BipartiteState& rho, const NeumarkBasis& nb_a, const NeumarkBasis& nb_b);

/// max |sum A^dagger A - I|
double completeness_residual(const KrausSet& m);

}  // namespace discordium
