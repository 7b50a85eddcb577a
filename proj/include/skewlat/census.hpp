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

#ifndef SKEWLAT_CENSUS_HPP
#define SKEWLAT_CENSUS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlat/core.hpp"

namespace skewlat {

enum class Tri : std::uint8_t { kIgnore, kRequire, kForbid };

struct CensusFilter {
  Tri zero = Tri::kIgnore;
  Tri commutative = Tri::kIgnore;
  Tri strongly_distributive = Tri::kIgnore;
  Tri left_handed = Tri::kIgnore;
  Tri right_handed = Tri::kIgnore;
  Tri normal = Tri::kIgnore;
  Tri symmetric = Tri::kIgnore;
  Tri distributive = Tri::kIgnore;

  /// Comma-separated flag names; a leading '!' forbids, otherwise requires.
  /// Example: "zero,left_handed,!commutative".
  static CensusFilter parse(std::string_view text);

  bool is_trivial() const noexcept;
  bool matches(const FiniteSkewLattice& s) const;
};

/// Lexicographically least (meet, join) table pair over all relabelings.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<ElementId> meet;
  std::vector<ElementId> join;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(const FiniteSkewLattice& s);

/// Validated structure with the canonical tables; zero set when one exists.
FiniteSkewLattice from_canonical(const CanonicalForm& form);

/// Census order limit: 5 for filtered runs, 4 for unfiltered ones, unless
/// SKEWLAT_ORDER_CAP is set.
std::size_t census_order_cap(bool filtered);

struct CensusOptions {
  /// Overrides census_order_cap().
  std::optional<std::size_t> order_cap;
  /// 0 = hardware concurrency.
  unsigned workers = 0;
};

/// One representative per isomorphism class of skew lattices of `order`
/// passing `filter`, in canonical-form order.
std::vector<FiniteSkewLattice> enumerate(std::size_t order, const CensusFilter& filter = {},
                                         const CensusOptions& options = {});

/// Backtracking table fill with incremental associativity/absorption
/// pruning, partitioned by the first meet row across workers. Returns the
/// sorted set of canonical forms.
std::vector<CanonicalForm> enumerate_by_pruned_search(std::size_t order, unsigned workers = 0);

/// Independent route for small orders: brute-force every idempotent
/// associative meet table, pair it with every join table, keep the pairs
/// that pass validate_skew_axioms. Order <= 3 only.
std::vector<CanonicalForm> enumerate_by_exhaustive_scan(std::size_t order);

/// Names accepted by evaluate_predicate / search_counterexample.
std::vector<std::string_view> predicate_names();

/// Evaluates a catalog predicate or an '&'-joined conjunction of them on a
/// validated structure. The completeness properties (JC, BA, EX, LS) are
/// false outside normal symmetric structures; the checks whose hypotheses
/// fail (prop_joins, implication_chain, theorem_ncframes) are vacuously true.
bool evaluate_predicate(const FiniteSkewLattice& s, std::string_view expression);

/// First census structure, by order then canonical form, satisfying
/// `hypothesis` and not `conclusion`.
std::optional<FiniteSkewLattice> search_counterexample(std::size_t order_max, std::string_view hypothesis,
                                                       std::string_view conclusion);

}  // namespace skewlat

#endif  // SKEWLAT_CENSUS_HPP
