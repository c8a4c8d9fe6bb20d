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

#include <compare>
#include <limits>
#include <span>

#include "discordium/qmat.hpp"

namespace discordium {

/// An information quantity in bits (base-2 logarithms throughout).
/// Relative entropy may be the +infinity sentinel; nothing else is.
struct Bits {
  double value = 0.0;

  static constexpr Bits infinity() { return Bits{std::numeric_limits<double>::infinity()}; }
  constexpr bool is_infinite() const { return value == std::numeric_limits<double>::infinity(); }

  constexpr Bits operator+(Bits o) const { return Bits{value + o.value}; }
  constexpr Bits operator-(Bits o) const { return Bits{value - o.value}; }
  constexpr auto operator<=>(const Bits&) const = default;
};

/// -sum p log2 p over a spectrum; entries at or below tol::kEntropyFloor contribute 0.
double shannon_bits(std::span<const double> probs);

/// Entropy of a raw Hermitian PSD matrix normalised by its trace. Returns 0 when the
/// trace is at or below tol::kEntropyFloor. Closed form for 1x1 and 2x2 inputs.
double normalized_entropy(const ComplexMatrix& m);

/// S(rho), clamped to [0, log2 dim].
Bits von_neumann(const DensityMatrix& rho);

/// S(rho || sigma) evaluated in sigma's eigenbasis; +infinity when rho has weight
/// above tol::kRank on the kernel of sigma.
Bits relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(rho^AB) - S(rho^A).
Bits conditional_entropy(const BipartiteState& rho);

/// S(rho^A) + S(rho^B) - S(rho^AB).
Bits mutual_information(const BipartiteState& rho);

}  // namespace discordium
