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

#include "skewlat/core.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "laws.hpp"

namespace skewlat {

namespace {

void check_id(const FiniteSkewLattice& s, ElementId a, const char* what) {
  if (a >= s.order()) {
    throw PreconditionError(std::string(what) + ": element id " + std::to_string(a) + " out of range for order " +
                            std::to_string(s.order()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteSkewLattice

FiniteSkewLattice FiniteSkewLattice::from_tables(std::size_t order, std::vector<ElementId> meet,
                                                 std::vector<ElementId> join, std::optional<ElementId> zero,
                                                 std::vector<std::string> labels) {
  if (order == 0) throw StructuralError("order must be positive");
  const std::size_t cells = order * order;
  if (meet.size() != cells) throw StructuralError("meet table is not " + std::to_string(order) + "x" + std::to_string(order));
  if (join.size() != cells) throw StructuralError("join table is not " + std::to_string(order) + "x" + std::to_string(order));
  for (std::size_t i = 0; i < cells; ++i) {
    if (meet[i] >= order) {
      throw StructuralError("meet entry (" + std::to_string(i / order) + "," + std::to_string(i % order) +
                            ") = " + std::to_string(meet[i]) + " out of range");
    }
    if (join[i] >= order) {
      throw StructuralError("join entry (" + std::to_string(i / order) + "," + std::to_string(i % order) +
                            ") = " + std::to_string(join[i]) + " out of range");
    }
  }
  if (zero && *zero >= order) throw StructuralError("zero " + std::to_string(*zero) + " out of range");
  if (!labels.empty() && labels.size() != order) {
    throw StructuralError("expected " + std::to_string(order) + " labels, got " + std::to_string(labels.size()));
  }
  FiniteSkewLattice s;
  s.order_ = order;
  s.meet_ = std::move(meet);
  s.join_ = std::move(join);
  s.zero_ = zero;
  s.labels_ = std::move(labels);
  return s;
}

FiniteSkewLattice FiniteSkewLattice::from_rows(const std::vector<std::vector<ElementId>>& meet,
                                               const std::vector<std::vector<ElementId>>& join,
                                               std::optional<ElementId> zero, std::vector<std::string> labels) {
  const std::size_t n = meet.size();
  if (join.size() != n) throw StructuralError("meet and join tables differ in size");
  std::vector<ElementId> m, j;
  m.reserve(n * n);
  j.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (meet[r].size() != n || join[r].size() != n) {
      throw StructuralError("row " + std::to_string(r) + " is not of length " + std::to_string(n));
    }
    m.insert(m.end(), meet[r].begin(), meet[r].end());
    j.insert(j.end(), join[r].begin(), join[r].end());
  }
  return from_tables(n, std::move(m), std::move(j), zero, std::move(labels));
}

std::string FiniteSkewLattice::label(ElementId a) const {
  if (a < labels_.size()) return labels_[a];
  return std::to_string(a);
}

FiniteSkewLattice FiniteSkewLattice::with_zero(std::optional<ElementId> zero) const {
  if (zero && *zero >= order_) throw StructuralError("zero " + std::to_string(*zero) + " out of range");
  FiniteSkewLattice s = *this;
  s.zero_ = zero;
  // A new zero must be re-validated.
  s.validated_ = false;
  return s;
}

FiniteSkewLattice FiniteSkewLattice::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order_) throw StructuralError("label count does not match order");
  FiniteSkewLattice s = *this;
  s.labels_ = std::move(labels);
  return s;
}

// ---------------------------------------------------------------------------
// Axioms and identities

Certificate validate_skew_axioms(const FiniteSkewLattice& s) {
  Certificate c = detail::scan_laws(s, detail::axiom_laws());
  if (!c.verdict || !s.zero()) return c;
  return detail::scan_laws(s, detail::zero_laws());
}

FiniteSkewLattice validated(FiniteSkewLattice s) {
  if (s.validated_) return s;
  Certificate c = validate_skew_axioms(s);
  if (!c.verdict) {
    const Violation* v = c.violation();
    std::string msg = "not a skew lattice";
    if (v != nullptr) {
      msg += ": " + v->law + " fails at (";
      for (std::size_t i = 0; i < v->tuple.size(); ++i) msg += (i ? "," : "") + s.label(v->tuple[i]);
      msg += ")";
    }
    throw PreconditionError(msg);
  }
  s.validated_ = true;
  return s;
}

void require_validated(const FiniteSkewLattice& s) {
  if (!s.is_validated()) throw PreconditionError("structure has not been validated as a skew lattice");
}

Identity parse_identity(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Identity>, 7> kNames = {{
      {"regular", Identity::kRegular},
      {"normal", Identity::kNormal},
      {"distributive", Identity::kDistributive},
      {"strongly_distributive", Identity::kStronglyDistributive},
      {"left_handed", Identity::kLeftHanded},
      {"right_handed", Identity::kRightHanded},
      {"commutative", Identity::kCommutative},
  }};
  for (const auto& [n, id] : kNames) {
    if (n == name) return id;
  }
  throw PreconditionError("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::kRegular: return "regular";
    case Identity::kNormal: return "normal";
    case Identity::kDistributive: return "distributive";
    case Identity::kStronglyDistributive: return "strongly_distributive";
    case Identity::kLeftHanded: return "left_handed";
    case Identity::kRightHanded: return "right_handed";
    case Identity::kCommutative: return "commutative";
  }
  return "?";
}

Certificate check_identity(const FiniteSkewLattice& s, Identity id) {
  require_validated(s);
  return detail::scan_laws(s, detail::identity_laws(id));
}

Certificate check_identity(const FiniteSkewLattice& s, std::string_view name) {
  return check_identity(s, parse_identity(name));
}

Certificate check_symmetric(const FiniteSkewLattice& s) {
  require_validated(s);
  const auto n = static_cast<ElementId>(s.order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const bool meet_commutes = s.meet(x, y) == s.meet(y, x);
      const bool join_commutes = s.join(x, y) == s.join(y, x);
      if (meet_commutes != join_commutes) return Certificate::fail(Violation{"symmetric", {x, y}, {}});
    }
  }
  return Certificate::pass();
}

bool is_commutative(const FiniteSkewLattice& s) {
  return detail::scan_laws(s, detail::identity_laws(Identity::kCommutative)).verdict;
}

std::optional<ElementId> find_zero(const FiniteSkewLattice& s) {
  const auto n = static_cast<ElementId>(s.order());
  for (ElementId z = 0; z < n; ++z) {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x) ok = s.meet(x, z) == z && s.meet(z, x) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<ElementId> effective_zero(const FiniteSkewLattice& s) {
  if (s.zero()) return s.zero();
  return find_zero(s);
}

// ---------------------------------------------------------------------------
// D-structure

DPartition green_D(const FiniteSkewLattice& s) {
  require_validated(s);
  const auto n = static_cast<ElementId>(s.order());
  DPartition d;
  d.class_of.assign(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    bool placed = false;
    for (ClassId c = 0; c < d.classes.size(); ++c) {
      if (detail::d_related(s, a, d.classes[c].front())) {
        d.class_of[a] = c;
        d.classes[c].push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) {
      d.class_of[a] = static_cast<ClassId>(d.classes.size());
      d.classes.push_back({a});
    }
  }
  const std::size_t k = d.classes.size();
  d.class_leq.assign(k * k, 0);
  // [a] <= [b] in S/D iff [a ^ b] = [a].
  for (ClassId u = 0; u < k; ++u) {
    for (ClassId v = 0; v < k; ++v) {
      const ElementId a = d.classes[u].front();
      const ElementId b = d.classes[v].front();
      d.class_leq[u * k + v] = d.class_of[s.meet(a, b)] == u ? 1 : 0;
    }
  }
  for (ClassId u = 0; u < k; ++u) {
    bool top = true, bottom = true;
    for (ClassId v = 0; v < k; ++v) {
      top = top && d.leq(v, u);
      bottom = bottom && d.leq(u, v);
    }
    if (top) d.top_class = u;
    if (bottom) d.bottom_class = u;
  }
  return d;
}

bool natural_leq(const FiniteSkewLattice& s, ElementId a, ElementId b) {
  require_validated(s);
  check_id(s, a, "natural_leq");
  check_id(s, b, "natural_leq");
  return detail::leq(s, a, b);
}

QuotientLattice quotient(const FiniteSkewLattice& s) { return quotient(s, green_D(s)); }

QuotientLattice quotient(const FiniteSkewLattice& s, const DPartition& d) {
  require_validated(s);
  const auto n = static_cast<ElementId>(s.order());
  const std::size_t k = d.size();
  std::vector<ElementId> qmeet(k * k), qjoin(k * k);
  for (ClassId u = 0; u < k; ++u) {
    for (ClassId v = 0; v < k; ++v) {
      qmeet[u * k + v] = d.class_of[s.meet(d.classes[u].front(), d.classes[v].front())];
      qjoin[u * k + v] = d.class_of[s.join(d.classes[u].front(), d.classes[v].front())];
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ClassId u = d.class_of[a], v = d.class_of[b];
      if (d.class_of[s.meet(a, b)] != qmeet[u * k + v] || d.class_of[s.join(a, b)] != qjoin[u * k + v]) {
        throw ConsistencyError("D is not a congruence at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  std::optional<ElementId> zero;
  if (s.zero()) zero = d.class_of[*s.zero()];
  std::vector<std::string> labels;
  if (!s.labels().empty()) {
    for (ClassId u = 0; u < k; ++u) labels.push_back("[" + s.label(d.classes[u].front()) + "]");
  }
  FiniteSkewLattice lattice = FiniteSkewLattice::from_tables(k, std::move(qmeet), std::move(qjoin), zero, std::move(labels));
  try {
    lattice = validated(std::move(lattice));
  } catch (const PreconditionError& e) {
    throw ConsistencyError(std::string("quotient is not a skew lattice: ") + e.what());
  }
  if (!is_commutative(lattice)) throw ConsistencyError("quotient is not commutative");
  return QuotientLattice{std::move(lattice), d.class_of};
}

Certificate check_lemma_reg(const FiniteSkewLattice& s) {
  require_validated(s);
  const DPartition d = green_D(s);
  const auto n = static_cast<ElementId>(s.order());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ClassId ca = d.class_of[a], cb = d.class_of[b];
      for (ElementId u = 0; u < n; ++u) {
        const ClassId cu = d.class_of[u];
        if (!d.leq(cu, ca) || !d.leq(cu, cb)) continue;
        for (ElementId v = 0; v < n; ++v) {
          const ClassId cv = d.class_of[v];
          if (!d.leq(ca, cv) || !d.leq(cb, cv)) continue;
          if (s.meet(s.meet(a, v), b) != s.meet(a, b)) {
            return Certificate::fail(Violation{"a ∧ v ∧ b = a ∧ b", {a, b, u, v}, {}});
          }
          if (s.join(s.join(a, u), b) != s.join(a, b)) {
            return Certificate::fail(Violation{"a ∨ u ∨ b = a ∨ b", {a, b, u, v}, {}});
          }
        }
      }
    }
  }
  return Certificate::pass();
}

// ---------------------------------------------------------------------------
// Homomorphisms and substructures

Certificate is_homomorphism(const Homomorphism& h) {
  const auto n = static_cast<ElementId>(h.source.order());
  if (h.map.size() != n) {
    throw StructuralError("homomorphism map has " + std::to_string(h.map.size()) + " entries for a source of order " +
                          std::to_string(n));
  }
  for (ElementId t : h.map) {
    if (t >= h.target.order()) throw StructuralError("homomorphism image " + std::to_string(t) + " out of range");
  }
  const auto& f = h.map;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (f[h.source.meet(a, b)] != h.target.meet(f[a], f[b])) {
        return Certificate::fail(Violation{"h(x ∧ y) = h(x) ∧ h(y)", {a, b}, {}});
      }
      if (f[h.source.join(a, b)] != h.target.join(f[a], f[b])) {
        return Certificate::fail(Violation{"h(x ∨ y) = h(x) ∨ h(y)", {a, b}, {}});
      }
    }
  }
  return Certificate::pass();
}

Subalgebra subalgebra(const FiniteSkewLattice& s, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw PreconditionError("subalgebra of an empty set");
  for (ElementId a : members) check_id(s, a, "subalgebra");
  const std::size_t k = members.size();
  std::vector<ElementId> local(s.order(), static_cast<ElementId>(s.order()));
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const ElementId m = s.meet(members[i], members[j]);
      const ElementId v = s.join(members[i], members[j]);
      if (local[m] == s.order() || local[v] == s.order()) {
        throw ConsistencyError("subset not closed under the operations at (" + std::to_string(members[i]) + "," +
                               std::to_string(members[j]) + ")");
      }
      meet[i * k + j] = local[m];
      join[i * k + j] = local[v];
    }
  }
  std::optional<ElementId> zero;
  if (s.zero() && local[*s.zero()] != s.order()) zero = local[*s.zero()];
  std::vector<std::string> labels;
  if (!s.labels().empty()) {
    for (ElementId a : members) labels.push_back(s.label(a));
  }
  FiniteSkewLattice sub = FiniteSkewLattice::from_tables(k, std::move(meet), std::move(join), zero, std::move(labels));
  if (s.is_validated()) sub = validated(std::move(sub));
  return Subalgebra{std::move(sub), std::move(members)};
}

Subalgebra down_set(const FiniteSkewLattice& s, ElementId a) {
  require_validated(s);
  check_id(s, a, "down_set");
  std::vector<ElementId> members;
  for (ElementId u = 0; u < s.order(); ++u) {
    if (detail::leq(s, u, a)) members.push_back(u);
  }
  return subalgebra(s, std::move(members));
}

ElementId restriction(const FiniteSkewLattice& s, const DPartition& d, ElementId a, ClassId u) {
  require_validated(s);
  check_id(s, a, "restriction");
  if (u >= d.size()) throw PreconditionError("class id " + std::to_string(u) + " out of range");
  if (!d.leq(u, d.class_of[a])) {
    throw PreconditionError("class " + std::to_string(u) + " is not below the class of " + s.label(a));
  }
  std::optional<ElementId> found;
  for (ElementId x : d.classes[u]) {
    if (!detail::leq(s, x, a)) continue;
    if (found) throw ConsistencyError("restriction of " + s.label(a) + " is not unique; structure is not normal");
    found = x;
  }
  if (!found) throw ConsistencyError("no restriction of " + s.label(a) + " to class " + std::to_string(u));
  return *found;
}

bool witness_violates(const FiniteSkewLattice& s, const Violation& v) {
  for (ElementId x : v.tuple) {
    if (x >= s.order()) return false;
  }
  if (v.law == "symmetric") {
    if (v.tuple.size() != 2) return false;
    const ElementId x = v.tuple[0], y = v.tuple[1];
    return (s.meet(x, y) == s.meet(y, x)) != (s.join(x, y) == s.join(y, x));
  }
  if (v.law == "a ∧ v ∧ b = a ∧ b" || v.law == "a ∨ u ∨ b = a ∨ b") {
    if (v.tuple.size() != 4) return false;
    const ElementId a = v.tuple[0], b = v.tuple[1], u = v.tuple[2], w = v.tuple[3];
    // Class order [x] <= [y] iff x ^ y ^ x = x.
    auto below = [&](ElementId x, ElementId y) { return s.meet(s.meet(x, y), x) == x; };
    if (!below(u, a) || !below(u, b) || !below(a, w) || !below(b, w)) return false;
    if (v.law == "a ∧ v ∧ b = a ∧ b") return s.meet(s.meet(a, w), b) != s.meet(a, b);
    return s.join(s.join(a, u), b) != s.join(a, b);
  }
  const detail::Law* law = detail::find_law(v.law);
  if (law == nullptr || v.tuple.size() != law->arity) return false;
  if (v.law.find('0') != std::string::npos && !s.zero()) return false;
  auto [lhs, rhs] = law->eval(s, v.tuple.data());
  return lhs != rhs;
}

}  // namespace skewlat
