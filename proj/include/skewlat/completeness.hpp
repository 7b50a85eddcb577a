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

#ifndef SKEWLAT_COMPLETENESS_HPP
#define SKEWLAT_COMPLETENESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "skewlat/core.hpp"

namespace skewlat {

/// Largest order for which commuting subsets are enumerated; subsets are
/// held as 64-bit masks.
inline constexpr std::size_t kMaxEnumerationOrder = 64;

/// Edge (a, b) iff a and b commute under both operations. Every vertex has a
/// self-loop.
class CommutationGraph {
 public:
  explicit CommutationGraph(const FiniteSkewLattice& s);

  std::size_t order() const noexcept { return order_; }
  bool adjacent(ElementId a, ElementId b) const noexcept { return (rows_[a] >> b) & 1U; }
  std::uint64_t neighbours(ElementId a) const noexcept { return rows_[a]; }

  /// Pairs {a, b}, a < b, that do NOT commute.
  std::vector<std::pair<ElementId, ElementId>> missing_edges() const;

 private:
  std::size_t order_;
  std::vector<std::uint64_t> rows_;
};

CommutationGraph commutation_graph(const FiniteSkewLattice& s);

/// A nonempty, pairwise-commuting, sorted set of element ids.
class CommutingSubset {
 public:
  /// Throws PreconditionError if `members` is empty or not pairwise commuting.
  CommutingSubset(const FiniteSkewLattice& s, std::vector<ElementId> members);

  const std::vector<ElementId>& members() const noexcept { return members_; }

 private:
  struct Trusted {};
  CommutingSubset(Trusted, std::vector<ElementId> members) : members_(std::move(members)) {}
  friend void for_each_commuting_subset(const FiniteSkewLattice&, const std::function<bool(const CommutingSubset&)>&,
                                        std::optional<std::size_t>);
  friend std::vector<CommutingSubset> maximal_commuting_subsets(const FiniteSkewLattice&);

  std::vector<ElementId> members_;
};

bool is_commuting(const FiniteSkewLattice& s, std::span<const ElementId> members);

/// Visits every nonempty clique of the commutation graph exactly once, in
/// lexicographic order of the sorted member lists. The visitor returns false
/// to stop early.
void for_each_commuting_subset(const FiniteSkewLattice& s, const std::function<bool(const CommutingSubset&)>& visit,
                               std::optional<std::size_t> max_size = std::nullopt);

std::vector<CommutingSubset> enumerate_commuting_subsets(const FiniteSkewLattice& s,
                                                         std::optional<std::size_t> max_size = std::nullopt);

/// Maximal cliques (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order.
std::vector<CommutingSubset> maximal_commuting_subsets(const FiniteSkewLattice& s);

/// Least upper bound of `c` in the natural partial order, if one exists.
/// Throws PreconditionError for an empty set.
std::optional<ElementId> sup_natural(const FiniteSkewLattice& s, std::span<const ElementId> c);
/// Greatest lower bound, dually.
std::optional<ElementId> inf_natural(const FiniteSkewLattice& s, std::span<const ElementId> c);

/// Left fold of the join over the members in ascending order. Requires a
/// symmetric structure and a commuting set.
ElementId join_fold(const FiniteSkewLattice& s, std::span<const ElementId> c);
/// Left fold of the meet, same preconditions.
ElementId meet_fold(const FiniteSkewLattice& s, std::span<const ElementId> c);

/// Join characterization via D-classes, checked for every commuting subset:
/// the supremum exists iff the class join exists and exactly one element of
/// that class dominates the subset; when it exists its class is the class
/// join. Requires a normal, symmetric structure.
Certificate check_prop_joins(const FiniteSkewLattice& s);

/// Every commuting subset has a supremum.
Certificate check_JC(const FiniteSkewLattice& s);
/// Every commuting subset has an upper bound (not required to commute with it).
Certificate check_BA(const FiniteSkewLattice& s);
/// Every commuting subset is contained in a lattice section.
Certificate check_EX(const FiniteSkewLattice& s);
/// Some lattice section exists.
Certificate check_LS(const FiniteSkewLattice& s);

/// A commutative subalgebra meeting every D-class exactly once.
struct LatticeSection {
  std::vector<ElementId> members;
  friend bool operator==(const LatticeSection&, const LatticeSection&) = default;
};

bool is_lattice_section(const FiniteSkewLattice& s, std::span<const ElementId> members);

/// All lattice sections, sorted. With a top class these are the down-sets of
/// its elements; without one, a backtracking search over class transversals.
std::vector<LatticeSection> lattice_sections(const FiniteSkewLattice& s);

/// JC => BA => EX => LS holds for the four computed verdicts. The witness
/// records the four values.
Certificate check_implication_chain(const FiniteSkewLattice& s);

/// Throws PreconditionError unless `s` is validated, normal and symmetric.
void require_normal_symmetric(const FiniteSkewLattice& s);

}  // namespace skewlat

#endif  // SKEWLAT_COMPLETENESS_HPP
