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

#include "discordium/discord.hpp"

#include <algorithm>
#include <sstream>

namespace discordium {

namespace {

// sum over columns gamma of p_gamma S(rho_gamma^B), columns taken as unnormalised
// rank-one measurement vectors on H^A.
double branch_entropy_sum(const ComplexMatrix& rho, Index n_a, Index n_b, const ComplexMatrix& vectors) {
  double total = 0.0;
  for (Index k = 0; k < vectors.cols(); ++k) {
    const ComplexMatrix block = rank_one_block(rho, n_a, n_b, vectors.col(k));
    const double p = block.trace().real();
    if (p > tol::kOutcome) {
      total += p * normalized_entropy(block);
    }
  }
  return total;
}

double baseline(const BipartiteState& rho) {
  return von_neumann(partial_trace(rho, Subsystem::A)).value - von_neumann(rho.state()).value;
}

double mutual_info_of_outcomes(const ComplexMatrix& rho, Index n_a, Index n_b, const ComplexMatrix& va,
                               const ComplexMatrix& vb) {
  const Index ka = va.cols();
  const Index kb = vb.cols();
  std::vector<double> joint(static_cast<std::size_t>(ka * kb), 0.0);
  std::vector<double> pa(static_cast<std::size_t>(ka), 0.0);
  std::vector<double> pb(static_cast<std::size_t>(kb), 0.0);
  for (Index g = 0; g < ka; ++g) {
    const ComplexMatrix block = rank_one_block(rho, n_a, n_b, va.col(g));
    for (Index d = 0; d < kb; ++d) {
      const double q = std::max(0.0, (vb.col(d).adjoint() * block * vb.col(d))(0, 0).real());
      joint[static_cast<std::size_t>(g * kb + d)] = q;
      pa[static_cast<std::size_t>(g)] += q;
      pb[static_cast<std::size_t>(d)] += q;
    }
  }
  return shannon_bits(pa) + shannon_bits(pb) - shannon_bits(joint);
}

void check_dims(const BipartiteState& rho, const KrausSet& m) {
  if (m.dim() != rho.n_a() || m.out_dim() != rho.n_a()) {
    throw DimensionError("measurement dimension differs from n_A");
  }
}

DiscordResult finish(const BipartiteState& rho, DiscordVariant variant, OptimalMeasurement m,
                     OptimizationOutcome outcome) {
  DiscordResult r{variant, evaluate(rho, variant, m), std::move(m), std::move(outcome)};
  return r;
}

}  // namespace

std::string DiscordVariant::label() const {
  std::ostringstream os;
  switch (kind) {
    case DiscordKind::Projective:
      os << "P";
      break;
    case DiscordKind::RankOne:
      os << "R(" << extension_a << ")";
      break;
    case DiscordKind::Neumark:
      os << "PE(" << extension_a << ")";
      break;
    case DiscordKind::TwoSided:
      os << "two-sided-PE(" << extension_a << "," << extension_b << ")";
      break;
  }
  return os.str();
}

Bits loss_functional(const BipartiteState& rho, const KrausSet& m) {
  check_dims(rho, m);
  const BipartiteState after = apply_one_sided(rho, m);
  return Bits{baseline(rho) + von_neumann(after.state()).value -
              von_neumann(partial_trace(after, Subsystem::A)).value};
}

Bits ensemble_loss(const BipartiteState& rho, const KrausSet& m) {
  check_dims(rho, m);
  double total = 0.0;
  for (const auto& a : m.operators()) {
    const ComplexMatrix block =
        conditional_block(rho.matrix(), rho.n_a(), rho.n_b(), ComplexMatrix(a.adjoint() * a));
    const double p = block.trace().real();
    if (p > tol::kOutcome) {
      total += p * normalized_entropy(block);
    }
  }
  return Bits{baseline(rho) + total};
}

Bits ensemble_loss(const BipartiteState& rho, const RankOnePOVM& m) {
  if (m.dim() != rho.n_a()) {
    throw DimensionError("measurement dimension differs from n_A");
  }
  ComplexMatrix vectors(m.dim(), static_cast<Index>(m.size()));
  for (std::size_t k = 0; k < m.size(); ++k) {
    vectors.col(static_cast<Index>(k)) = m.vectors()[k];
  }
  return Bits{baseline(rho) + branch_entropy_sum(rho.matrix(), rho.n_a(), rho.n_b(), vectors)};
}

Bits two_sided_loss(const BipartiteState& rho, const NeumarkBasis& nb_a, const NeumarkBasis& nb_b) {
  if (nb_a.n_a() != rho.n_a() || nb_b.n_a() != rho.n_b()) {
    throw DimensionError("two-sided measurement does not match the subsystem dimensions");
  }
  const double info = mutual_information(rho).value;
  const double classical = mutual_info_of_outcomes(rho.matrix(), rho.n_a(), rho.n_b(),
                                                   nb_a.extension_basis().topRows(rho.n_a()),
                                                   nb_b.extension_basis().topRows(rho.n_b()));
  return Bits{info - classical};
}

Index default_extension_dim(const BipartiteState& rho) {
  const Index r = partial_trace(rho, Subsystem::A).rank();
  return std::clamp(r * r, rho.n_a(), rho.n_a() * rho.n_a());
}

Index default_extension_dim_b(const BipartiteState& rho) {
  const Index r = partial_trace(rho, Subsystem::B).rank();
  return std::clamp(r * r, rho.n_b(), rho.n_b() * rho.n_b());
}

Bits evaluate(const BipartiteState& rho, const DiscordVariant& variant, const OptimalMeasurement& m) {
  switch (variant.kind) {
    case DiscordKind::Projective: {
      const ProjectiveBasis basis(m.bases.at(0));
      if (basis.dim() != rho.n_a()) {
        throw DimensionError("projective basis dimension differs from n_A");
      }
      return Bits{baseline(rho) + branch_entropy_sum(rho.matrix(), rho.n_a(), rho.n_b(), basis.basis())};
    }
    case DiscordKind::RankOne:
    case DiscordKind::Neumark: {
      const NeumarkBasis nb(rho.n_a(), m.bases.at(0));
      return Bits{baseline(rho) + branch_entropy_sum(rho.matrix(), rho.n_a(), rho.n_b(),
                                                     nb.extension_basis().topRows(rho.n_a()))};
    }
    case DiscordKind::TwoSided:
      return two_sided_loss(rho, NeumarkBasis(rho.n_a(), m.bases.at(0)), NeumarkBasis(rho.n_b(), m.bases.at(1)));
  }
  throw std::logic_error("unknown discord variant");
}

DiscordResult discord_P(const BipartiteState& rho, const OptimizerConfig& cfg) {
  const Index na = rho.n_a();
  const Index nb = rho.n_b();
  const ComplexMatrix& m = rho.matrix();
  OptimizationOutcome outcome = minimize(
      [&](const UnitaryParams& p) { return branch_entropy_sum(m, na, nb, to_unitary(p)); }, na, cfg);
  OptimalMeasurement best{{to_unitary(outcome.best_params, na)}};
  return finish(rho, DiscordVariant{DiscordKind::Projective, na, 0}, std::move(best), std::move(outcome));
}

DiscordResult discord_PE(const BipartiteState& rho, Index n, const OptimizerConfig& cfg) {
  const Index na = rho.n_a();
  const Index nb = rho.n_b();
  if (n < na) {
    throw DimensionError("Neumark extension dimension N must be at least n_A");
  }
  const ComplexMatrix& m = rho.matrix();
  OptimizationOutcome outcome = minimize(
      [&](const UnitaryParams& p) { return branch_entropy_sum(m, na, nb, to_unitary(p).topRows(na)); }, n, cfg);
  OptimalMeasurement best{{to_unitary(outcome.best_params, n)}};
  return finish(rho, DiscordVariant{DiscordKind::Neumark, n, 0}, std::move(best), std::move(outcome));
}

DiscordResult discord_R(const BipartiteState& rho, Index n, const OptimizerConfig& cfg) {
  DiscordResult r = discord_PE(rho, n, cfg);
  r.variant.kind = DiscordKind::RankOne;
  return r;
}

DiscordResult discord_two_sided(const BipartiteState& rho, Index n_a_ext, Index n_b_ext,
                                const OptimizerConfig& cfg) {
  const Index na = rho.n_a();
  const Index nb = rho.n_b();
  if (n_a_ext < na || n_b_ext < nb) {
    throw DimensionError("two-sided extension dimensions must be at least n_A and n_B");
  }
  const ComplexMatrix& m = rho.matrix();
  const auto split = static_cast<std::size_t>(n_a_ext * n_a_ext);
  const std::size_t total = split + static_cast<std::size_t>(n_b_ext * n_b_ext);
  // maximise the classical mutual information of the outcomes
  OptimizationOutcome outcome = minimize_params(
      [&](std::span<const double> x) {
        const ComplexMatrix ua = to_unitary(x.first(split), n_a_ext);
        const ComplexMatrix ub = to_unitary(x.subspan(split), n_b_ext);
        return -mutual_info_of_outcomes(m, na, nb, ua.topRows(na), ub.topRows(nb));
      },
      total, cfg);
  const std::span<const double> best_x(outcome.best_params);
  OptimalMeasurement best{{to_unitary(best_x.first(split), n_a_ext), to_unitary(best_x.subspan(split), n_b_ext)}};
  return finish(rho, DiscordVariant{DiscordKind::TwoSided, n_a_ext, n_b_ext}, std::move(best), std::move(outcome));
}

ClassicalityVerdict is_classical(const BipartiteState& rho, const OptimizerConfig& cfg, double threshold) {
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("is_classical: threshold must be positive");
  }
  DiscordResult r = discord_P(rho, cfg);
  return ClassicalityVerdict{r.value.value <= threshold, r.value, ProjectiveBasis(r.measurement.bases.front())};
}

}  // namespace discordium
