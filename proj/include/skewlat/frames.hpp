// Copyright 2026 The skewlat Authors
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

#ifndef SKEWLAT_FRAMES_HPP
#define SKEWLAT_FRAMES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "skewlat/core.hpp"

namespace skewlat {

/// Orders below this use the exhaustive subset check in is_frame().
inline constexpr std::size_t kExhaustiveFrameOrder = 12;

struct FrameVerdict {
  bool is_frame = false;
  /// (x, {y_i}) with x ^ V y_i != V (x ^ y_i).
  std::optional<std::pair<ElementId, std::vector<ElementId>>> failing_instance;
};

/// Frame test for a finite lattice: bounded, and x ^ V Y = V (x ^ y) for
/// every x and nonempty Y. Exhaustive over subsets below
/// kExhaustiveFrameOrder, pairwise distributivity otherwise. Throws
/// PreconditionError on non-commutative input.
FrameVerdict is_frame(const FiniteSkewLattice& lattice);
FrameVerdict is_frame_exhaustive(const FiniteSkewLattice& lattice);
FrameVerdict is_frame_pairwise(const FiniteSkewLattice& lattice);

/// Bounded, distributive and complemented commutative lattice.
bool is_boolean_lattice(const FiniteSkewLattice& lattice);

/// Noncommutative frame test: strongly distributive, has 0, every commuting
/// subset has a supremum, and both infinite distributive laws hold for every
/// commuting subset and every element.
///
/// Failure witnesses: a Violation of the failing strong distributivity law,
/// a note "no zero", a SubsetWitness without supremum, or a Violation whose
/// law is one of the two infinite laws with tuple {y} or {x} and the
/// commuting subset in `subset`.
Certificate is_ncframe(const FiniteSkewLattice& s);

/// For a join complete, strongly distributive skew lattice with 0: true iff
/// is_ncframe(s) agrees with is_frame(s/D). The witness records both sides.
/// Throws PreconditionError if a hypothesis is missing.
Certificate check_theorem_ncframes(const FiniteSkewLattice& s);

/// Re-evaluates an infinite-distributivity Violation from is_ncframe.
bool frame_witness_violates(const FiniteSkewLattice& s, const Violation& v);

inline constexpr const char* kLeftInfiniteLaw = "(⋁ x_i) ∧ y = ⋁ (x_i ∧ y)";
inline constexpr const char* kRightInfiniteLaw = "x ∧ (⋁ y_i) = ⋁ (x ∧ y_i)";

}  // namespace skewlat

#endif  // SKEWLAT_FRAMES_HPP
