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

#include "skewlat/completeness.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "laws.hpp"

namespace skewlat {

namespace {

void require_enumerable(const FiniteSkewLattice& s) {
  require_validated(s);
  if (s.order() > kMaxEnumerationOrder) {
    throw PreconditionError("commuting-subset enumeration supports order <= " + std::to_string(kMaxEnumerationOrder));
  }
}

void require_ids(const FiniteSkewLattice& s, std::span<const ElementId> c) {
  if (c.empty()) throw PreconditionError("subset must be nonempty");
  for (ElementId a : c) {
    if (a >= s.order()) throw PreconditionError("element id " + std::to_string(a) + " out of range");
  }
}

std::vector<ElementId> mask_members(std::uint64_t mask) {
  std::vector<ElementId> out;
  while (mask != 0) {
    out.push_back(static_cast<ElementId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t all_below(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Least element of the class order among upper bounds of `classes`.
std::optional<ClassId> class_join(const DPartition& d, const std::vector<ClassId>& classes) {
  std::vector<ClassId> bounds;
  for (ClassId w = 0; w < d.size(); ++w) {
    if (std::all_of(classes.begin(), classes.end(), [&](ClassId c) { return d.leq(c, w); })) bounds.push_back(w);
  }
  for (ClassId w : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](ClassId x) { return d.leq(w, x); })) return w;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Commutation graph

CommutationGraph::CommutationGraph(const FiniteSkewLattice& s) : order_(s.order()), rows_(s.order(), 0) {
  require_enumerable(s);
  for (ElementId a = 0; a < order_; ++a) {
    for (ElementId b = 0; b < order_; ++b) {
      if (detail::commutes(s, a, b)) rows_[a] |= std::uint64_t{1} << b;
    }
  }
}

std::vector<std::pair<ElementId, ElementId>> CommutationGraph::missing_edges() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a = 0; a < order_; ++a) {
    for (ElementId b = a + 1; b < order_; ++b) {
      if (!adjacent(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

CommutationGraph commutation_graph(const FiniteSkewLattice& s) { return CommutationGraph(s); }

bool is_commuting(const FiniteSkewLattice& s, std::span<const ElementId> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!detail::commutes(s, members[i], members[j])) return false;
    }
  }
  return true;
}

CommutingSubset::CommutingSubset(const FiniteSkewLattice& s, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  require_ids(s, members);
  if (!is_commuting(s, members)) throw PreconditionError("subset is not commuting");
  members_ = std::move(members);
}

void for_each_commuting_subset(const FiniteSkewLattice& s, const std::function<bool(const CommutingSubset&)>& visit,
                               std::optional<std::size_t> max_size) {
  const CommutationGraph g(s);
  const std::size_t n = s.order();
  const std::size_t cap = max_size.value_or(n);
  if (cap == 0) return;
  std::vector<ElementId> current;
  bool stopped = false;
  // Extends `current` by each candidate in ascending order; candidates are
  // the common neighbours above the last member.
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t candidates) {
    while (candidates != 0 && !stopped) {
      const auto b = static_cast<ElementId>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      current.push_back(b);
      if (!visit(CommutingSubset(CommutingSubset::Trusted{}, current))) {
        stopped = true;
      } else if (current.size() < cap) {
        const std::uint64_t above = b + 1 >= 64 ? 0 : ~all_below(b + 1);
        extend(candidates & g.neighbours(b) & above);
      }
      current.pop_back();
    }
  };
  extend(all_below(n));
}

std::vector<CommutingSubset> enumerate_commuting_subsets(const FiniteSkewLattice& s,
                                                         std::optional<std::size_t> max_size) {
  std::vector<CommutingSubset> out;
  for_each_commuting_subset(
      s,
      [&](const CommutingSubset& c) {
        out.push_back(c);
        return true;
      },
      max_size);
  return out;
}

std::vector<CommutingSubset> maximal_commuting_subsets(const FiniteSkewLattice& s) {
  const CommutationGraph g(s);
  std::vector<std::vector<ElementId>> found;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand = [&](std::uint64_t r, std::uint64_t p,
                                                                               std::uint64_t x) {
    if (p == 0 && x == 0) {
      found.push_back(mask_members(r));
      return;
    }
    // Pivot on the vertex of P | X with the most neighbours in P.
    const std::uint64_t px = p | x;
    ElementId pivot = static_cast<ElementId>(std::countr_zero(px));
    int best = -1;
    for (std::uint64_t m = px; m != 0; m &= m - 1) {
      const auto u = static_cast<ElementId>(std::countr_zero(m));
      const int deg = std::popcount(p & g.neighbours(u));
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    const std::uint64_t pivot_nbrs = g.neighbours(pivot) & ~(std::uint64_t{1} << pivot);
    for (std::uint64_t m = p & ~pivot_nbrs; m != 0; m &= m - 1) {
      const auto v = static_cast<ElementId>(std::countr_zero(m));
      const std::uint64_t bit = std::uint64_t{1} << v;
      // Self-loops are in the neighbourhood; strip v itself.
      const std::uint64_t nv = g.neighbours(v) & ~bit;
      expand(r | bit, p & nv, x & nv);
      p &= ~bit;
      x |= bit;
    }
  };
  expand(0, all_below(s.order()), 0);
  std::sort(found.begin(), found.end());
  std::vector<CommutingSubset> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(CommutingSubset(CommutingSubset::Trusted{}, std::move(f)));
  return out;
}

// ---------------------------------------------------------------------------
// Suprema and infima

std::optional<ElementId> sup_natural(const FiniteSkewLattice& s, std::span<const ElementId> c) {
  require_validated(s);
  require_ids(s, c);
  std::vector<ElementId> bounds;
  for (ElementId u = 0; u < s.order(); ++u) {
    if (std::all_of(c.begin(), c.end(), [&](ElementId x) { return detail::leq(s, x, u); })) bounds.push_back(u);
  }
  for (ElementId u : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](ElementId w) { return detail::leq(s, u, w); })) return u;
  }
  return std::nullopt;
}

std::optional<ElementId> inf_natural(const FiniteSkewLattice& s, std::span<const ElementId> c) {
  require_validated(s);
  require_ids(s, c);
  std::vector<ElementId> bounds;
  for (ElementId u = 0; u < s.order(); ++u) {
    if (std::all_of(c.begin(), c.end(), [&](ElementId x) { return detail::leq(s, u, x); })) bounds.push_back(u);
  }
  for (ElementId u : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](ElementId w) { return detail::leq(s, w, u); })) return u;
  }
  return std::nullopt;
}

namespace {

std::vector<ElementId> fold_preconditions(const FiniteSkewLattice& s, std::span<const ElementId> c) {
  require_validated(s);
  require_ids(s, c);
  if (!check_symmetric(s).verdict) throw PreconditionError("fold requires a symmetric skew lattice");
  if (!is_commuting(s, c)) throw PreconditionError("fold requires a commuting subset");
  std::vector<ElementId> sorted(c.begin(), c.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

ElementId join_fold(const FiniteSkewLattice& s, std::span<const ElementId> c) {
  const auto sorted = fold_preconditions(s, c);
  ElementId acc = sorted.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) acc = s.join(acc, sorted[i]);
  return acc;
}

ElementId meet_fold(const FiniteSkewLattice& s, std::span<const ElementId> c) {
  const auto sorted = fold_preconditions(s, c);
  ElementId acc = sorted.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) acc = s.meet(acc, sorted[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Completeness properties

void require_normal_symmetric(const FiniteSkewLattice& s) {
  require_validated(s);
  if (!check_identity(s, Identity::kNormal).verdict) throw PreconditionError("structure is not normal");
  if (!check_symmetric(s).verdict) throw PreconditionError("structure is not symmetric");
}

Certificate check_prop_joins(const FiniteSkewLattice& s) {
  require_normal_symmetric(s);
  require_enumerable(s);
  const DPartition d = green_D(s);
  std::optional<Certificate> failure;
  for_each_commuting_subset(s, [&](const CommutingSubset& subset) {
    const auto& c = subset.members();
    const std::optional<ElementId> sup = sup_natural(s, c);
    std::vector<ClassId> classes;
    for (ElementId x : c) classes.push_back(d.class_of[x]);
    const std::optional<ClassId> u = class_join(d, classes);
    std::vector<ElementId> dominating;
    if (u) {
      for (ElementId a : d.classes[*u]) {
        if (std::all_of(c.begin(), c.end(), [&](ElementId x) { return detail::leq(s, x, a); })) dominating.push_back(a);
      }
    }
    const bool rhs = u.has_value() && dominating.size() == 1;
    if (sup.has_value() != rhs) {
      failure = Certificate::fail(SubsetWitness{c, sup ? "supremum exists but the class-side condition fails"
                                                       : "class-side condition holds but no supremum exists"});
      return false;
    }
    if (sup && (d.class_of[*sup] != *u || dominating.front() != *sup)) {
      failure = Certificate::fail(SubsetWitness{c, "class of the supremum differs from the class join"});
      return false;
    }
    return true;
  });
  return failure ? *failure : Certificate::pass();
}

Certificate check_JC(const FiniteSkewLattice& s) {
  require_normal_symmetric(s);
  std::optional<Certificate> failure;
  for_each_commuting_subset(s, [&](const CommutingSubset& c) {
    if (sup_natural(s, c.members())) return true;
    failure = Certificate::fail(SubsetWitness{c.members(), "no supremum"});
    return false;
  });
  return failure ? *failure : Certificate::pass();
}

Certificate check_BA(const FiniteSkewLattice& s) {
  require_normal_symmetric(s);
  // An upper bound of a maximal commuting subset bounds each of its subsets.
  for (const auto& c : maximal_commuting_subsets(s)) {
    bool bounded = false;
    for (ElementId u = 0; u < s.order() && !bounded; ++u) {
      bounded = std::all_of(c.members().begin(), c.members().end(), [&](ElementId x) { return detail::leq(s, x, u); });
    }
    if (!bounded) return Certificate::fail(SubsetWitness{c.members(), "no upper bound"});
  }
  return Certificate::pass();
}

Certificate check_EX(const FiniteSkewLattice& s) {
  require_normal_symmetric(s);
  const auto sections = lattice_sections(s);
  for (const auto& c : maximal_commuting_subsets(s)) {
    const bool extends = std::any_of(sections.begin(), sections.end(), [&](const LatticeSection& l) {
      return std::includes(l.members.begin(), l.members.end(), c.members().begin(), c.members().end());
    });
    if (!extends) return Certificate::fail(SubsetWitness{c.members(), "not contained in any lattice section"});
  }
  return Certificate::pass();
}

Certificate check_LS(const FiniteSkewLattice& s) {
  require_normal_symmetric(s);
  const auto sections = lattice_sections(s);
  if (sections.empty()) return Certificate::fail({}, "no lattice section");
  return Certificate::pass(SectionWitness{sections.front().members});
}

bool is_lattice_section(const FiniteSkewLattice& s, std::span<const ElementId> members) {
  require_validated(s);
  const DPartition d = green_D(s);
  std::vector<char> in(s.order(), 0);
  std::vector<int> per_class(d.size(), 0);
  for (ElementId a : members) {
    if (a >= s.order() || in[a]) return false;
    in[a] = 1;
    ++per_class[d.class_of[a]];
  }
  if (!std::all_of(per_class.begin(), per_class.end(), [](int k) { return k == 1; })) return false;
  for (ElementId a : members) {
    for (ElementId b : members) {
      if (!in[s.meet(a, b)] || !in[s.join(a, b)]) return false;
      if (!detail::commutes(s, a, b)) return false;
    }
  }
  return true;
}

std::vector<LatticeSection> lattice_sections(const FiniteSkewLattice& s) {
  require_normal_symmetric(s);
  const DPartition d = green_D(s);
  std::vector<LatticeSection> out;
  if (d.top_class) {
    for (ElementId t : d.classes[*d.top_class]) {
      std::vector<ElementId> members;
      for (ElementId u = 0; u < s.order(); ++u) {
        if (detail::leq(s, u, t)) members.push_back(u);
      }
      if (is_lattice_section(s, members)) out.push_back({std::move(members)});
    }
  } else {
    // One element per class, pairwise commuting, then closure.
    std::vector<ElementId> chosen;
    std::function<void(ClassId)> pick = [&](ClassId c) {
      if (c == d.size()) {
        std::vector<ElementId> members = chosen;
        std::sort(members.begin(), members.end());
        if (is_lattice_section(s, members)) out.push_back({std::move(members)});
        return;
      }
      for (ElementId a : d.classes[c]) {
        if (std::all_of(chosen.begin(), chosen.end(), [&](ElementId b) { return detail::commutes(s, a, b); })) {
          chosen.push_back(a);
          pick(c + 1);
          chosen.pop_back();
        }
      }
    };
    pick(0);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.members < b.members; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Certificate check_implication_chain(const FiniteSkewLattice& s) {
  const bool jc = check_JC(s).verdict;
  const bool ba = check_BA(s).verdict;
  const bool ex = check_EX(s).verdict;
  const bool ls = check_LS(s).verdict;
  CaseAnalysis values{{{"JC", jc}, {"BA", ba}, {"EX", ex}, {"LS", ls}}};
  const bool monotone = (!jc || ba) && (!ba || ex) && (!ex || ls);
  return Certificate{monotone, std::move(values), monotone ? "" : "implication chain broken"};
}

}  // namespace skewlat
