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

#include "discordium/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "discordium/discord.hpp"
#include "discordium/entangle.hpp"
#include "discordium/entropy.hpp"
#include "discordium/parallel.hpp"

namespace discordium {

namespace {

constexpr std::array<BatteryInfo, 7> kBatteries{{
    {"nonnegativity", 1e-8, "loss functional >= 0 for random states and Kraus sets"},
    {"marginal_invariance", 1e-10, "tr_A of the measured state equals rho^B for every measurement class"},
    {"refinement_monotonicity", 1e-9, "branch loss does not increase under rank-one refinement"},
    {"inequality_chain", 1e-5, "D_PE(N = n_A + 2) <= D_P"},
    {"mutual_information_bound", 1e-7, "D_P, D_PE <= I(rho); randomizing measurement attains I(rho)"},
    {"relative_entropy_monotonicity", 1e-8, "S(M rho || M sigma) <= S(rho || sigma) for one-sided Kraus sets"},
    {"koashi_winter", 1e-4, "D_PE(N = 4) = E(rho^BC) + S(rho^A) - S(rho^AB) for rank-2 2x2 states"},
}};

// Eigenvalue entropy through the generic solver, kept apart from the library's closed forms.
double oracle_entropy(const ComplexMatrix& m) {
  const double t = m.trace().real();
  if (t <= 1e-15) {
    return 0.0;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()) / t, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-15) {
      s -= p * std::log2(p);
    }
  }
  return s;
}

ComplexVector qubit_direction(double theta, double phi) {
  ComplexVector v(2);
  v << std::cos(theta), std::polar(std::sin(theta), phi);
  return v;
}

ComplexVector qubit_complement(double theta, double phi) {
  ComplexVector v(2);
  v << -std::polar(std::sin(theta), -phi), std::cos(theta);
  return v;
}

// (<v| (x) I) rho (|v> (x) I) written out directly
ComplexMatrix project_a(const ComplexMatrix& rho, Index n_a, Index n_b, const ComplexVector& v) {
  ComplexMatrix out = ComplexMatrix::Zero(n_b, n_b);
  for (Index i = 0; i < n_a; ++i) {
    for (Index j = 0; j < n_a; ++j) {
      out += std::conj(v(i)) * v(j) * rho.block(i * n_b, j * n_b, n_b, n_b);
    }
  }
  return out;
}

Index pick(Rng& rng, Index lo, Index hi) {
  std::uniform_int_distribution<Index> d(lo, hi);
  return d(rng);
}

struct Dims {
  Index a;
  Index b;
};

Dims random_dims(Rng& rng) {
  static constexpr std::array<Dims, 3> kDims{{{2, 2}, {2, 3}, {3, 2}}};
  return kDims[static_cast<std::size_t>(pick(rng, 0, 2))];
}

BipartiteState random_state(Index n_a, Index n_b, Rng& rng) {
  const Index rank = pick(rng, 1, n_a * n_b);
  return BipartiteState(n_a, n_b, random_density(n_a * n_b, rank, rng));
}

double marginal_residual(const BipartiteState& before, const BipartiteState& after) {
  const ComplexMatrix rb = partial_trace(before.matrix(), before.n_a(), before.n_b(), Subsystem::B);
  const ComplexMatrix rb2 = partial_trace(after.matrix(), after.n_a(), after.n_b(), Subsystem::B);
  return (rb - rb2).cwiseAbs().maxCoeff();
}

// One trial; returns the violation, positive when the checked relation is broken.
double run_trial(std::string_view name, Rng& rng, StateEnsemble ensemble, const OptimizerConfig& cfg) {
  if (name == "nonnegativity") {
    const Dims d = random_dims(rng);
    const BipartiteState rho = random_state(d.a, d.b, rng);
    const KrausSet k = random_kraus_set(d.a, pick(rng, 1, 4), rng);
    return -loss_functional(rho, k).value;
  }
  if (name == "marginal_invariance") {
    const Dims d = random_dims(rng);
    const BipartiteState rho = random_state(d.a, d.b, rng);
    const std::vector<KrausSet> classes{ProjectiveBasis(random_unitary(d.a, rng)).kraus(),
                                        from_neumark(random_neumark_basis(d.a, d.a + 2, rng)).kraus(),
                                        random_kraus_set(d.a, pick(rng, 1, 4), rng), randomizing_measurement(d.a)};
    double worst = 0.0;
    for (const KrausSet& k : classes) {
      worst = std::max(worst, marginal_residual(rho, apply_one_sided(rho, k)));
    }
    return worst;
  }
  if (name == "refinement_monotonicity") {
    const Dims d = random_dims(rng);
    const BipartiteState rho = random_state(d.a, d.b, rng);
    const KrausSet k = random_kraus_set(d.a, pick(rng, 1, 4), rng);
    return ensemble_loss(rho, rank_one_refine(k)).value - ensemble_loss(rho, k).value;
  }
  if (name == "inequality_chain") {
    const Index nb = pick(rng, 2, 3);
    const BipartiteState rho =
        ensemble == StateEnsemble::Classical ? random_classical_state(2, nb, rng) : random_state(2, nb, rng);
    const double dp = discord_P(rho, cfg).value.value;
    const double dpe = discord_PE(rho, rho.n_a() + 2, cfg).value.value;
    if (ensemble == StateEnsemble::Classical) {
      return std::max({dp, dpe, dpe - dp});
    }
    return dpe - dp;
  }
  if (name == "mutual_information_bound") {
    const Index nb = pick(rng, 2, 3);
    const BipartiteState rho = random_state(2, nb, rng);
    const double info = mutual_information(rho).value;
    const double dp = discord_P(rho, cfg).value.value;
    const double dpe = discord_PE(rho, rho.n_a() + 2, cfg).value.value;
    const double saturation = std::abs(loss_functional(rho, randomizing_measurement(rho.n_a())).value - info);
    return std::max({dp - info, dpe - info, saturation});
  }
  if (name == "relative_entropy_monotonicity") {
    const Dims d = random_dims(rng);
    const BipartiteState rho = random_state(d.a, d.b, rng);
    const BipartiteState sigma(d.a, d.b, random_density(d.a * d.b, d.a * d.b, rng));
    const KrausSet k = random_kraus_set(d.a, pick(rng, 1, 4), rng);
    const double before = relative_entropy(rho.state(), sigma.state()).value;
    const double after = relative_entropy(apply_one_sided(rho, k).state(), apply_one_sided(sigma, k).state()).value;
    return after - before;
  }
  if (name == "koashi_winter") {
    const BipartiteState rho(2, 2, random_density(4, 2, rng));
    return koashi_winter_residual(rho, 4, cfg).residual;
  }
  throw std::invalid_argument("unknown battery: " + std::string(name));
}

}  // namespace

double grid_discord_qubit(const BipartiteState& rho, int resolution) {
  if (rho.n_a() != 2) {
    throw DimensionError("grid_discord_qubit: subsystem A must be a qubit");
  }
  if (resolution < 1) {
    throw std::invalid_argument("grid_discord_qubit: resolution must be positive");
  }
  const Index nb = rho.n_b();
  const ComplexMatrix& m = rho.matrix();
  const double base = oracle_entropy(partial_trace(m, 2, nb, Subsystem::A)) - oracle_entropy(m);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    const double theta = 0.5 * std::numbers::pi * i / resolution;
    for (int j = 0; j < resolution; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / resolution;
      double total = 0.0;
      for (const ComplexVector& v : {qubit_direction(theta, phi), qubit_complement(theta, phi)}) {
        const ComplexMatrix block = project_a(m, 2, nb, v);
        total += block.trace().real() * oracle_entropy(block);
      }
      best = std::min(best, total);
    }
  }
  return base + best;
}

double grid_discord_two_sided_qubits(const BipartiteState& rho, int resolution) {
  if (rho.n_a() != 2 || rho.n_b() != 2) {
    throw DimensionError("grid_discord_two_sided_qubits: expected a two-qubit state");
  }
  if (resolution < 1) {
    throw std::invalid_argument("grid_discord_two_sided_qubits: resolution must be positive");
  }
  const ComplexMatrix& m = rho.matrix();
  const double info = oracle_entropy(partial_trace(m, 2, 2, Subsystem::A)) +
                      oracle_entropy(partial_trace(m, 2, 2, Subsystem::B)) - oracle_entropy(m);
  std::vector<std::array<ComplexVector, 2>> bases;
  for (int i = 0; i < resolution; ++i) {
    const double theta = 0.5 * std::numbers::pi * i / resolution;
    for (int j = 0; j < resolution; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / resolution;
      bases.push_back({qubit_direction(theta, phi), qubit_complement(theta, phi)});
    }
  }
  auto h = [](double p) { return p > 1e-15 ? -p * std::log2(p) : 0.0; };
  double best_classical = 0.0;
  for (const auto& ba : bases) {
    const std::array<ComplexMatrix, 2> blocks{project_a(m, 2, 2, ba[0]), project_a(m, 2, 2, ba[1])};
    for (const auto& bb : bases) {
      double joint = 0.0;
      std::array<double, 2> pa{0.0, 0.0};
      std::array<double, 2> pb{0.0, 0.0};
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const double q = std::max(0.0, (bb[y].adjoint() * blocks[x] * bb[y])(0, 0).real());
          joint += h(q);
          pa[x] += q;
          pb[y] += q;
        }
      }
      best_classical = std::max(best_classical, h(pa[0]) + h(pa[1]) + h(pb[0]) + h(pb[1]) - joint);
    }
  }
  return info - best_classical;
}

KrausSet random_kraus_set(Index n, Index outcomes, Rng& rng) {
  const ComplexMatrix u = random_unitary(n * outcomes, rng);
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(outcomes));
  for (Index k = 0; k < outcomes; ++k) {
    ops.emplace_back(u.block(k * n, 0, n, n));
  }
  return KrausSet(std::move(ops));
}

NeumarkBasis random_neumark_basis(Index n_a, Index n, Rng& rng) {
  return NeumarkBasis(n_a, random_unitary(n, rng));
}

double conditional_relative_entropy_residual(const BipartiteState& rho) {
  const DensityMatrix ra = partial_trace(rho, Subsystem::A);
  const auto nb = static_cast<double>(rho.n_b());
  const DensityMatrix ref(tensor_product(ra.matrix(), ComplexMatrix::Identity(rho.n_b(), rho.n_b()) / nb));
  const double lhs = relative_entropy(rho.state(), ref).value;
  const double rhs = von_neumann(ra).value - von_neumann(rho.state()).value + std::log2(nb);
  return std::abs(lhs - rhs);
}

double joint_entropy_residual(Index n_a, Index n_b, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> probs(static_cast<std::size_t>(n_a));
  for (double& p : probs) {
    p = expo(rng);
  }
  double total = 0.0;
  for (double p : probs) {
    total += p;
  }
  for (double& p : probs) {
    p /= total;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    acc += probs[i];
  }
  probs.back() = 1.0 - acc;
  const ComplexMatrix basis = random_unitary(n_a, rng);
  std::vector<DensityMatrix> rho_b;
  double weighted = 0.0;
  for (Index a = 0; a < n_a; ++a) {
    rho_b.push_back(random_density(n_b, pick(rng, 1, n_b), rng));
    weighted += probs[static_cast<std::size_t>(a)] * von_neumann(rho_b.back()).value;
  }
  const BipartiteState rho = classical_state(probs, basis, rho_b);
  return std::abs(von_neumann(rho.state()).value - shannon_bits(probs) - weighted);
}

std::span<const BatteryInfo> battery_table() { return kBatteries; }

BatteryReport run_battery(std::string_view name, std::size_t trials, std::uint64_t seed,
                          std::optional<double> tolerance, StateEnsemble ensemble, const OptimizerConfig& cfg) {
  const auto it =
      std::find_if(kBatteries.begin(), kBatteries.end(), [&](const BatteryInfo& b) { return b.name == name; });
  if (it == kBatteries.end()) {
    throw std::invalid_argument("unknown battery: " + std::string(name));
  }
  BatteryReport report;
  report.name = std::string(name);
  report.trials = trials;
  report.tolerance = tolerance.value_or(it->tolerance);

  std::vector<double> violations(trials, 0.0);
  parallel_for(trials, [&](std::size_t i) {
    Rng rng = make_rng(seed + i);
    violations[i] = run_trial(name, rng, ensemble, cfg);
  });
  report.worst_violation = trials > 0 ? -std::numeric_limits<double>::infinity() : 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    report.worst_violation = std::max(report.worst_violation, violations[i]);
    if (!(violations[i] <= report.tolerance)) {
      ++report.failures;
      report.seeds_of_failures.push_back(seed + i);
    }
  }
  return report;
}

}  // namespace discordium
