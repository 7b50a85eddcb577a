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

// Private header: equational laws as evaluable (lhs, rhs) pairs.

#ifndef SKEWLAT_SRC_LAWS_HPP
#define SKEWLAT_SRC_LAWS_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "skewlat/core.hpp"

namespace skewlat::detail {

struct Law {
  std::string_view name;
  std::size_t arity;
  std::pair<ElementId, ElementId> (*eval)(const FiniteSkewLattice&, const ElementId*);
};

/// Axioms in witness-priority order. The zero laws are evaluated only when a
/// zero is declared.
std::span<const Law> axiom_laws();
std::span<const Law> zero_laws();
std::span<const Law> identity_laws(Identity id);

/// Looks a law up by name across every catalog; nullptr if unknown.
const Law* find_law(std::string_view name);

/// Lexicographic successor with the last position fastest; false on wrap.
bool advance_tuple(std::vector<ElementId>& tuple, ElementId n);

/// First failing instance of the given laws, law-major then lexicographic
/// tuple order.
Certificate scan_laws(const FiniteSkewLattice& s, std::span<const Law> laws);

inline bool leq(const FiniteSkewLattice& s, ElementId a, ElementId b) {
  return s.meet(a, b) == a && s.meet(b, a) == a;
}

inline bool commutes(const FiniteSkewLattice& s, ElementId a, ElementId b) {
  return s.meet(a, b) == s.meet(b, a) && s.join(a, b) == s.join(b, a);
}

inline bool d_related(const FiniteSkewLattice& s, ElementId a, ElementId b) {
  return s.meet(s.meet(a, b), a) == a && s.meet(s.meet(b, a), b) == b;
}

}  // namespace skewlat::detail

#endif  // SKEWLAT_SRC_LAWS_HPP
