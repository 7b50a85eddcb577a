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

#include "laws.hpp"

#include <array>
#include <vector>

namespace skewlat::detail {
namespace {

using S = FiniteSkewLattice;
using Eval = std::pair<ElementId, ElementId>;

ElementId m(const S& s, ElementId a, ElementId b) { return s.meet(a, b); }
ElementId j(const S& s, ElementId a, ElementId b) { return s.join(a, b); }

constexpr Law kAxioms[] = {
    {"x ∧ x = x", 1, [](const S& s, const ElementId* v) -> Eval { return {m(s, v[0], v[0]), v[0]}; }},
    {"x ∨ x = x", 1, [](const S& s, const ElementId* v) -> Eval { return {j(s, v[0], v[0]), v[0]}; }},
    {"(x ∧ y) ∧ z = x ∧ (y ∧ z)", 3,
     [](const S& s, const ElementId* v) -> Eval {
       return {m(s, m(s, v[0], v[1]), v[2]), m(s, v[0], m(s, v[1], v[2]))};
     }},
    {"(x ∨ y) ∨ z = x ∨ (y ∨ z)", 3,
     [](const S& s, const ElementId* v) -> Eval {
       return {j(s, j(s, v[0], v[1]), v[2]), j(s, v[0], j(s, v[1], v[2]))};
     }},
    {"x ∧ (x ∨ y) = x", 2,
     [](const S& s, const ElementId* v) -> Eval { return {m(s, v[0], j(s, v[0], v[1])), v[0]}; }},
    {"x ∨ (x ∧ y) = x", 2,
     [](const S& s, const ElementId* v) -> Eval { return {j(s, v[0], m(s, v[0], v[1])), v[0]}; }},
    {"(x ∨ y) ∧ y = y", 2,
     [](const S& s, const ElementId* v) -> Eval { return {m(s, j(s, v[0], v[1]), v[1]), v[1]}; }},
    {"(x ∧ y) ∨ y = y", 2,
     [](const S& s, const ElementId* v) -> Eval { return {j(s, m(s, v[0], v[1]), v[1]), v[1]}; }},
};

// Only meaningful when s.zero() is set; callers guarantee that.
constexpr Law kZero[] = {
    {"x ∨ 0 = x", 1, [](const S& s, const ElementId* v) -> Eval { return {j(s, v[0], *s.zero()), v[0]}; }},
    {"0 ∨ x = x", 1, [](const S& s, const ElementId* v) -> Eval { return {j(s, *s.zero(), v[0]), v[0]}; }},
    {"x ∧ 0 = 0", 1,
     [](const S& s, const ElementId* v) -> Eval { return {m(s, v[0], *s.zero()), *s.zero()}; }},
    {"0 ∧ x = 0", 1,
     [](const S& s, const ElementId* v) -> Eval { return {m(s, *s.zero(), v[0]), *s.zero()}; }},
};

constexpr Law kRegular[] = {
    {"a ∧ x ∧ a ∧ y ∧ a = a ∧ x ∧ y ∧ a", 3,
     [](const S& s, const ElementId* v) -> Eval {
       const ElementId a = v[0], x = v[1], y = v[2];
       return {m(s, m(s, m(s, m(s, a, x), a), y), a), m(s, m(s, m(s, a, x), y), a)};
     }},
    {"a ∨ x ∨ a ∨ y ∨ a = a ∨ x ∨ y ∨ a", 3,
     [](const S& s, const ElementId* v) -> Eval {
       const ElementId a = v[0], x = v[1], y = v[2];
       return {j(s, j(s, j(s, j(s, a, x), a), y), a), j(s, j(s, j(s, a, x), y), a)};
     }},
};

constexpr Law kNormal[] = {
    {"x ∧ y ∧ z ∧ x = x ∧ z ∧ y ∧ x", 3,
     [](const S& s, const ElementId* v) -> Eval {
       const ElementId x = v[0], y = v[1], z = v[2];
       return {m(s, m(s, m(s, x, y), z), x), m(s, m(s, m(s, x, z), y), x)};
     }},
};

constexpr Law kDistributive[] = {
    {"x ∧ (y ∨ z) ∧ x = (x ∧ y ∧ x) ∨ (x ∧ z ∧ x)", 3,
     [](const S& s, const ElementId* v) -> Eval {
       const ElementId x = v[0], y = v[1], z = v[2];
       return {m(s, m(s, x, j(s, y, z)), x), j(s, m(s, m(s, x, y), x), m(s, m(s, x, z), x))};
     }},
    {"x ∨ (y ∧ z) ∨ x = (x ∨ y ∨ x) ∧ (x ∨ z ∨ x)", 3,
     [](const S& s, const ElementId* v) -> Eval {
       const ElementId x = v[0], y = v[1], z = v[2];
       return {j(s, j(s, x, m(s, y, z)), x), m(s, j(s, j(s, x, y), x), j(s, j(s, x, z), x))};
     }},
};

constexpr Law kStronglyDistributive[] = {
    {"(x ∨ y) ∧ z = (x ∧ z) ∨ (y ∧ z)", 3,
     [](const S& s, const ElementId* v) -> Eval {
       const ElementId x = v[0], y = v[1], z = v[2];
       return {m(s, j(s, x, y), z), j(s, m(s, x, z), m(s, y, z))};
     }},
    {"x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)", 3,
     [](const S& s, const ElementId* v) -> Eval {
       const ElementId x = v[0], y = v[1], z = v[2];
       return {m(s, x, j(s, y, z)), j(s, m(s, x, y), m(s, x, z))};
     }},
};

constexpr Law kLeftHanded[] = {
    {"x ∧ y ∧ x = x ∧ y", 2,
     [](const S& s, const ElementId* v) -> Eval { return {m(s, m(s, v[0], v[1]), v[0]), m(s, v[0], v[1])}; }},
    {"x ∨ y ∨ x = y ∨ x", 2,
     [](const S& s, const ElementId* v) -> Eval { return {j(s, j(s, v[0], v[1]), v[0]), j(s, v[1], v[0])}; }},
};

constexpr Law kRightHanded[] = {
    {"x ∧ y ∧ x = y ∧ x", 2,
     [](const S& s, const ElementId* v) -> Eval { return {m(s, m(s, v[0], v[1]), v[0]), m(s, v[1], v[0])}; }},
    {"x ∨ y ∨ x = x ∨ y", 2,
     [](const S& s, const ElementId* v) -> Eval { return {j(s, j(s, v[0], v[1]), v[0]), j(s, v[0], v[1])}; }},
};

constexpr Law kCommutative[] = {
    {"x ∧ y = y ∧ x", 2,
     [](const S& s, const ElementId* v) -> Eval { return {m(s, v[0], v[1]), m(s, v[1], v[0])}; }},
    {"x ∨ y = y ∨ x", 2,
     [](const S& s, const ElementId* v) -> Eval { return {j(s, v[0], v[1]), j(s, v[1], v[0])}; }},
};

}  // namespace

std::span<const Law> axiom_laws() { return kAxioms; }
std::span<const Law> zero_laws() { return kZero; }

std::span<const Law> identity_laws(Identity id) {
  switch (id) {
    case Identity::kRegular: return kRegular;
    case Identity::kNormal: return kNormal;
    case Identity::kDistributive: return kDistributive;
    case Identity::kStronglyDistributive: return kStronglyDistributive;
    case Identity::kLeftHanded: return kLeftHanded;
    case Identity::kRightHanded: return kRightHanded;
    case Identity::kCommutative: return kCommutative;
  }
  return {};
}

const Law* find_law(std::string_view name) {
  const std::array<std::span<const Law>, 9> catalogs = {
      kAxioms, kZero, kRegular, kNormal, kDistributive, kStronglyDistributive, kLeftHanded, kRightHanded,
      kCommutative};
  for (auto catalog : catalogs) {
    for (const Law& law : catalog) {
      if (law.name == name) return &law;
    }
  }
  return nullptr;
}

bool advance_tuple(std::vector<ElementId>& tuple, ElementId n) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < n) return true;
    tuple[i] = 0;
  }
  return false;
}

Certificate scan_laws(const FiniteSkewLattice& s, std::span<const Law> laws) {
  const auto n = static_cast<ElementId>(s.order());
  std::vector<ElementId> tuple;
  for (const Law& law : laws) {
    tuple.assign(law.arity, 0);
    do {
      auto [lhs, rhs] = law.eval(s, tuple.data());
      if (lhs != rhs) return Certificate::fail(Violation{std::string(law.name), tuple, {}});
    } while (advance_tuple(tuple, n));
  }
  return Certificate::pass();
}

}  // namespace skewlat::detail
