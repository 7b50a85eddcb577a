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

#ifndef SKEWLAT_CORE_HPP
#define SKEWLAT_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewlat/certificate.hpp"
#include "skewlat/errors.hpp"

namespace skewlat {

using ElementId = std::uint32_t;
using ClassId = std::uint32_t;

/// A finite algebra with two binary operations given by n x n tables.
///
/// Construction only checks that the tables are well formed (square, every
/// entry in range). Whether the tables actually form a skew lattice is decided
/// by validate_skew_axioms(); validated() returns a copy carrying the
/// validated flag that downstream operations require.
class FiniteSkewLattice {
 public:
  /// Flat row-major tables; row index is the left operand.
  static FiniteSkewLattice from_tables(std::size_t order, std::vector<ElementId> meet,
                                       std::vector<ElementId> join,
                                       std::optional<ElementId> zero = std::nullopt,
                                       std::vector<std::string> labels = {});

  static FiniteSkewLattice from_rows(const std::vector<std::vector<ElementId>>& meet,
                                     const std::vector<std::vector<ElementId>>& join,
                                     std::optional<ElementId> zero = std::nullopt,
                                     std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }

  ElementId meet(ElementId a, ElementId b) const noexcept { return meet_[a * order_ + b]; }
  ElementId join(ElementId a, ElementId b) const noexcept { return join_[a * order_ + b]; }

  std::span<const ElementId> meet_table() const noexcept { return meet_; }
  std::span<const ElementId> join_table() const noexcept { return join_; }

  std::optional<ElementId> zero() const noexcept { return zero_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Display label, falling back to the decimal id.
  std::string label(ElementId a) const;

  bool is_validated() const noexcept { return validated_; }

  FiniteSkewLattice with_zero(std::optional<ElementId> zero) const;
  FiniteSkewLattice with_labels(std::vector<std::string> labels) const;

  /// Tables, zero and order; labels and the validated flag are ignored.
  friend bool operator==(const FiniteSkewLattice& lhs, const FiniteSkewLattice& rhs) noexcept {
    return lhs.order_ == rhs.order_ && lhs.meet_ == rhs.meet_ && lhs.join_ == rhs.join_ &&
           lhs.zero_ == rhs.zero_;
  }

 private:
  FiniteSkewLattice() = default;
  friend FiniteSkewLattice validated(FiniteSkewLattice s);

  std::size_t order_ = 0;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::optional<ElementId> zero_;
  std::vector<std::string> labels_;
  bool validated_ = false;
};

/// Checks idempotency, associativity, the four absorption laws and, when a
/// zero is declared, the zero laws. The witness is the first violated law in
/// catalog order, at the first tuple in lexicographic order.
Certificate validate_skew_axioms(const FiniteSkewLattice& s);

/// Returns `s` flagged as validated; throws PreconditionError carrying the
/// failed certificate otherwise.
FiniteSkewLattice validated(FiniteSkewLattice s);

/// Throws PreconditionError unless `s` carries the validated flag.
void require_validated(const FiniteSkewLattice& s);

/// Identity names accepted by check_identity.
enum class Identity {
  kRegular,
  kNormal,
  kDistributive,
  kStronglyDistributive,
  kLeftHanded,
  kRightHanded,
  kCommutative,
};

/// Parses the snake_case name ("strongly_distributive", ...); throws
/// PreconditionError for unknown names.
Identity parse_identity(std::string_view name);
std::string_view identity_name(Identity id);

Certificate check_identity(const FiniteSkewLattice& s, Identity id);
Certificate check_identity(const FiniteSkewLattice& s, std::string_view name);

/// x v y = y v x iff x ^ y = y ^ x, for every pair.
Certificate check_symmetric(const FiniteSkewLattice& s);

bool is_commutative(const FiniteSkewLattice& s);

/// The element z with x ^ z = z = z ^ x for all x, if any. Independent of the
/// declared zero.
std::optional<ElementId> find_zero(const FiniteSkewLattice& s);

/// Declared zero if present, otherwise find_zero().
std::optional<ElementId> effective_zero(const FiniteSkewLattice& s);

/// Green's D-relation on a finite skew lattice.
struct DPartition {
  std::vector<ClassId> class_of;
  std::vector<std::vector<ElementId>> classes;
  /// Row-major |classes| x |classes| relation; leq(u, v) reads it.
  std::vector<char> class_leq;
  std::optional<ClassId> top_class;
  std::optional<ClassId> bottom_class;

  std::size_t size() const noexcept { return classes.size(); }
  bool leq(ClassId u, ClassId v) const noexcept { return class_leq[u * classes.size() + v] != 0; }
};

/// Classes are numbered in order of their smallest member.
DPartition green_D(const FiniteSkewLattice& s);

/// a <= b in the natural partial order: a ^ b = b ^ a = a.
bool natural_leq(const FiniteSkewLattice& s, ElementId a, ElementId b);

struct QuotientLattice {
  FiniteSkewLattice lattice;
  std::vector<ClassId> projection;
};

/// S/D. Throws ConsistencyError if the class operations are not well defined.
QuotientLattice quotient(const FiniteSkewLattice& s);
QuotientLattice quotient(const FiniteSkewLattice& s, const DPartition& d);

/// Lemma on D-bounded quadruples: a ^ v ^ b = a ^ b and a v u v b = a v b
/// whenever [u] <= [a], [b] <= [v].
Certificate check_lemma_reg(const FiniteSkewLattice& s);

struct Homomorphism {
  FiniteSkewLattice source;
  FiniteSkewLattice target;
  std::vector<ElementId> map;
};

Certificate is_homomorphism(const Homomorphism& h);

/// A subset of a skew lattice closed under both operations, with its own
/// tables. `members` is sorted; local id i corresponds to members[i].
struct Subalgebra {
  FiniteSkewLattice lattice;
  std::vector<ElementId> members;
};

/// Throws ConsistencyError if `members` is not closed under both operations.
Subalgebra subalgebra(const FiniteSkewLattice& s, std::vector<ElementId> members);

/// a-down = { u : u <= a }.
Subalgebra down_set(const FiniteSkewLattice& s, ElementId a);

/// The unique d <= a with [d] = u. Requires u <= [a]; a missing or repeated
/// candidate means `s` is not normal and raises ConsistencyError.
ElementId restriction(const FiniteSkewLattice& s, const DPartition& d, ElementId a, ClassId u);

/// Re-evaluates a Violation against the tables. True when the witness
/// really violates the named law. Unknown law names return false.
bool witness_violates(const FiniteSkewLattice& s, const Violation& v);

}  // namespace skewlat

#endif  // SKEWLAT_CORE_HPP
