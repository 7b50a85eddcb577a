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

#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "skewlat/census.hpp"
#include "skewlat/errors.hpp"

using namespace skewlat;

namespace {

std::set<std::pair<oracle::Table, oracle::Table>> oracle_forms(const std::vector<FiniteSkewLattice>& found) {
  std::set<std::pair<oracle::Table, oracle::Table>> out;
  for (const auto& s : found) {
    const oracle::Table m(s.meet_table().begin(), s.meet_table().end());
    const oracle::Table j(s.join_table().begin(), s.join_table().end());
    out.insert(oracle::canonical(s.order(), m, j));
  }
  return out;
}

}  // namespace

TEST_CASE("small census counts") {
  CHECK(enumerate(1).size() == 1);
  const auto two = enumerate(2);
  REQUIRE(two.size() == 3);
  CHECK(is_commutative(two[0]));
  CHECK(check_identity(two[1], Identity::kLeftHanded).verdict);
  CHECK_FALSE(is_commutative(two[1]));
  CHECK(check_identity(two[2], Identity::kRightHanded).verdict);
  CHECK_FALSE(is_commutative(two[2]));
}

TEST_CASE("census counts agree with the brute-force oracle up to order 4") {
  // Counts frozen from oracle::census, which scans every idempotent table pair.
  const std::size_t expected[] = {0, 1, 3, 7, 21};
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto found = enumerate(n);
    CHECK(found.size() == expected[n]);
    const auto reference = oracle::census(n);
    CHECK(reference.size() == expected[n]);
    CHECK(oracle_forms(found) == reference);
    for (const auto& s : found) CHECK(oracle::is_skew_lattice(n, {s.meet_table().begin(), s.meet_table().end()},
                                                              {s.join_table().begin(), s.join_table().end()}));
  }
}

TEST_CASE("the two library strategies agree up to order 3") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(enumerate_by_pruned_search(n, 1) == enumerate_by_exhaustive_scan(n));
}

TEST_CASE("census output does not depend on the worker count") {
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto one = enumerate_by_pruned_search(n, 1);
    CHECK(enumerate_by_pruned_search(n, 3) == one);
    CHECK(enumerate_by_pruned_search(n, 8) == one);
    CHECK(std::is_sorted(one.begin(), one.end()));
  }
}

TEST_CASE("filters") {
  const auto lh = enumerate(2, CensusFilter::parse("left_handed,!commutative"));
  REQUIRE(lh.size() == 1);
  CHECK(lh[0] == validated(oracle::L2()).with_zero(lh[0].zero()));
  CHECK(enumerate(2, CensusFilter::parse("zero")).size() == 1);
  CHECK(CensusFilter::parse("").is_trivial());
  CHECK_THROWS_AS(CensusFilter::parse("bogus"), PreconditionError);
  for (const auto& s : enumerate(4, CensusFilter::parse("strongly_distributive,zero"))) {
    CHECK(oracle::strongly_distributive(s));
    CHECK(oracle::zero(s).has_value());
  }
}

TEST_CASE("census caps") {
  CHECK(census_order_cap(false) == 4);
  CHECK(census_order_cap(true) == 5);
  CHECK_THROWS_AS(enumerate(5), PreconditionError);
  CHECK_THROWS_AS(enumerate(0), PreconditionError);
  CensusOptions opts;
  opts.order_cap = 2;
  CHECK_THROWS_AS(enumerate(3, {}, opts), PreconditionError);
  setenv("SKEWLAT_ORDER_CAP", "3", 1);
  CHECK(census_order_cap(true) == 3);
  CHECK_THROWS_AS(enumerate(4), PreconditionError);
  unsetenv("SKEWLAT_ORDER_CAP");
}

TEST_CASE("canonical forms") {
  const auto l2 = validated(oracle::L2());
  const auto r2 = validated(oracle::R2());
  const auto c2 = validated(oracle::chain(2));
  CHECK(canonicalize(l2) != canonicalize(r2));
  CHECK(canonicalize(l2) != canonicalize(c2));
  CHECK(canonicalize(validated(oracle::permuted(c2, {1, 0}))) == canonicalize(c2));
  for (const auto& s : enumerate(4)) {
    const CanonicalForm f = canonicalize(s);
    CHECK(canonicalize(from_canonical(f)) == f);
    const std::vector<std::vector<ElementId>> perms{{1, 0, 3, 2}, {3, 2, 1, 0}, {2, 0, 3, 1}};
    for (const auto& p : perms) CHECK(canonicalize(validated(oracle::permuted(s, p))) == f);
  }
  // Canonical equality matches an explicit isomorphism search.
  const auto all = enumerate(3);
  for (const auto& a : all)
    for (const auto& b : all) CHECK((canonicalize(a) == canonicalize(b)) == oracle::find_isomorphism(a, b).has_value());
}

TEST_CASE("counterexample search") {
  const auto l2 = search_counterexample(2, "normal", "commutative");
  REQUIRE(l2);
  CHECK(l2->order() == 2);
  CHECK(check_identity(*l2, Identity::kLeftHanded).verdict);
  CHECK_FALSE(search_counterexample(4, "strongly_distributive", "symmetric&distributive&normal"));
  CHECK_FALSE(search_counterexample(4, "validated", "regular"));
  CHECK_FALSE(search_counterexample(4, "validated", "lemma_reg"));
  CHECK_FALSE(search_counterexample(4, "normal", "down_sets_commutative"));
  CHECK_FALSE(search_counterexample(4, "down_sets_commutative", "normal"));
  CHECK_THROWS_AS(search_counterexample(2, "bogus", "normal"), PreconditionError);
  CHECK_THROWS_AS(evaluate_predicate(validated(oracle::L2()), "normal&bogus"), PreconditionError);
}

TEST_CASE("every catalog predicate evaluates on every small structure") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : enumerate(n)) {
      for (auto name : predicate_names()) CHECK_NOTHROW(evaluate_predicate(s, name));
      CHECK(evaluate_predicate(s, "implication_chain"));
      CHECK(evaluate_predicate(s, "prop_joins"));
      CHECK(evaluate_predicate(s, "theorem_ncframes"));
    }
  }
}
