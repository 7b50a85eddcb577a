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

#include <algorithm>

#include "oracles.hpp"
#include "skewlat/census.hpp"
#include "skewlat/completeness.hpp"
#include "skewlat/core.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/models.hpp"

using namespace skewlat;

namespace {

std::vector<FiniteSkewLattice> small_census() {
  std::vector<FiniteSkewLattice> all;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& s : enumerate(n)) all.push_back(std::move(s));
  }
  return all;
}

const std::vector<FiniteSkewLattice>& census_upto4() {
  static const std::vector<FiniteSkewLattice> all = small_census();
  return all;
}

ElementId pfn22(const PartialFunction& f) { return pfn_encode(2, 2, f); }

}  // namespace

TEST_CASE("validate accepts L2 and the one-element structure") {
  CHECK(validate_skew_axioms(oracle::L2()).verdict);
  const auto one = FiniteSkewLattice::from_rows({{0}}, {{0}});
  CHECK(validate_skew_axioms(one).verdict);
  CHECK(check_identity(validated(one), Identity::kCommutative).verdict);
}

TEST_CASE("both operations left projection fails absorption at (a, b)") {
  const auto s = FiniteSkewLattice::from_rows({{0, 0}, {1, 1}}, {{0, 0}, {1, 1}});
  const Certificate c = validate_skew_axioms(s);
  REQUIRE_FALSE(c.verdict);
  REQUIRE(c.violation() != nullptr);
  CHECK(c.violation()->law == "(x ∨ y) ∧ y = y");
  CHECK(c.violation()->tuple == std::vector<ElementId>{0, 1});
  CHECK(witness_violates(s, *c.violation()));
}

TEST_CASE("malformed tables are structural errors") {
  CHECK_THROWS_AS(FiniteSkewLattice::from_tables(2, {0, 0, 0}, {0, 0, 0, 0}), StructuralError);
  CHECK_THROWS_AS(FiniteSkewLattice::from_tables(2, {0, 0, 0, 7}, {0, 0, 0, 0}), StructuralError);
  CHECK_THROWS_AS(FiniteSkewLattice::from_rows({{0, 0}, {0}}, {{0, 0}, {0, 0}}), StructuralError);
  CHECK_THROWS_AS(FiniteSkewLattice::from_tables(0, {}, {}), StructuralError);
}

TEST_CASE("a declared zero that is not a zero fails validation") {
  const auto s = oracle::chain(3).with_zero(ElementId{2});
  const Certificate c = validate_skew_axioms(s);
  CHECK_FALSE(c.verdict);
  REQUIRE(c.violation());
  CHECK(witness_violates(s, *c.violation()));
}

TEST_CASE("downstream operations require the validated flag") {
  CHECK_THROWS_AS(green_D(oracle::L2()), PreconditionError);
  CHECK_THROWS_AS(check_identity(oracle::L2(), Identity::kNormal), PreconditionError);
  const auto bad = FiniteSkewLattice::from_rows({{0, 0}, {1, 1}}, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(validated(bad), PreconditionError);
  CHECK(validated(oracle::L2()).is_validated());
  CHECK_FALSE(validated(oracle::chain(2)).with_zero(std::nullopt).is_validated());
}

TEST_CASE("identity catalog on L2") {
  const auto l2 = validated(oracle::L2());
  CHECK(check_identity(l2, "left_handed").verdict);
  CHECK(check_identity(l2, "strongly_distributive").verdict);
  CHECK(check_identity(l2, "regular").verdict);
  CHECK(check_identity(l2, "normal").verdict);
  CHECK_FALSE(check_identity(l2, "right_handed").verdict);
  CHECK_FALSE(check_identity(l2, "commutative").verdict);
  CHECK(check_symmetric(l2).verdict);
  CHECK_THROWS_AS(check_identity(l2, "bogus"), PreconditionError);
  const auto r2 = validated(oracle::R2());
  CHECK(check_identity(r2, "right_handed").verdict);
  CHECK_FALSE(check_identity(r2, "left_handed").verdict);
}

TEST_CASE("failed identities carry witnesses that re-evaluate") {
  const auto m3 = validated(oracle::m3());
  const Certificate d = check_identity(m3, Identity::kDistributive);
  REQUIRE_FALSE(d.verdict);
  CHECK(witness_violates(m3, *d.violation()));
  const auto r2 = validated(oracle::R2());
  const Certificate lh = check_identity(r2, Identity::kLeftHanded);
  REQUIRE_FALSE(lh.verdict);
  CHECK(witness_violates(r2, *lh.violation()));
}

TEST_CASE("identity names round-trip") {
  for (Identity id : {Identity::kRegular, Identity::kNormal, Identity::kDistributive, Identity::kStronglyDistributive,
                      Identity::kLeftHanded, Identity::kRightHanded, Identity::kCommutative}) {
    CHECK(parse_identity(identity_name(id)) == id);
  }
}

TEST_CASE("green_D examples") {
  const DPartition l2 = green_D(validated(oracle::L2()));
  CHECK(l2.size() == 1);
  CHECK(l2.classes[0] == std::vector<ElementId>{0, 1});
  const DPartition c3 = green_D(validated(oracle::chain(3)));
  CHECK(c3.size() == 3);
  CHECK(c3.top_class == ClassId{2});
  CHECK(c3.bottom_class == ClassId{0});

  const auto p = build_pfn_algebra(2, 2);
  const DPartition d = green_D(p);
  std::vector<std::size_t> sizes;
  for (const auto& c : d.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 4});
  for (ElementId a = 0; a < p.order(); ++a) {
    for (ElementId b = 0; b < p.order(); ++b) {
      CHECK((d.class_of[a] == d.class_of[b]) == (pfn_decode(2, 2, a).domain() == pfn_decode(2, 2, b).domain()));
    }
  }
}

TEST_CASE("natural order examples") {
  const auto l2 = validated(oracle::L2());
  CHECK(natural_leq(l2, 0, 0));
  CHECK_FALSE(natural_leq(l2, 0, 1));
  CHECK_THROWS_AS(natural_leq(l2, 0, 5), PreconditionError);
  const auto p = build_pfn_algebra(2, 2);
  const ElementId f = pfn22({{{0, 1}}});
  const ElementId g = pfn22({{{0, 1}, {1, 0}}});
  CHECK(natural_leq(p, f, g));
  CHECK_FALSE(natural_leq(p, g, f));
}

TEST_CASE("quotient examples") {
  CHECK(quotient(validated(oracle::L2())).lattice.order() == 1);
  const auto c3 = validated(oracle::chain(3));
  const QuotientLattice q3 = quotient(c3);
  CHECK(q3.lattice == c3.with_zero(q3.lattice.zero()));
  CHECK(oracle::find_isomorphism(q3.lattice, c3).has_value());
  const QuotientLattice qp = quotient(build_pfn_algebra(2, 2));
  CHECK(qp.lattice.order() == 4);
  CHECK(oracle::find_isomorphism(qp.lattice, oracle::boolean4()).has_value());
}

TEST_CASE("quotient refuses structures that fail the axioms") {
  const auto raw = FiniteSkewLattice::from_rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}, {{0, 1, 2}, {1, 1, 0}, {2, 2, 2}});
  REQUIRE_FALSE(validate_skew_axioms(raw).verdict);
  CHECK_THROWS_AS(quotient(raw), PreconditionError);
}

TEST_CASE("lemma on D-bounded quadruples") {
  CHECK(check_lemma_reg(validated(oracle::L2())).verdict);
  CHECK(check_lemma_reg(validated(oracle::m3())).verdict);
  CHECK(check_lemma_reg(build_pfn_algebra(2, 2)).verdict);
}

TEST_CASE("homomorphism examples") {
  const auto l2 = validated(oracle::L2());
  CHECK(is_homomorphism({l2, l2, {0, 1}}).verdict);
  const auto c2 = validated(oracle::chain(2));
  CHECK(is_homomorphism({l2, c2, {1, 1}}).verdict);
  const auto p = build_pfn_algebra(2, 2);
  const QuotientLattice q = quotient(p);
  CHECK(is_homomorphism({p, q.lattice, q.projection}).verdict);
  const Certificate bad = is_homomorphism({c2, c2, {1, 0}});
  CHECK_FALSE(bad.verdict);
  CHECK_THROWS_AS(is_homomorphism({c2, c2, {0}}), StructuralError);
  CHECK_THROWS_AS(is_homomorphism({c2, c2, {0, 3}}), StructuralError);
}

TEST_CASE("down_set examples") {
  const auto l2 = validated(oracle::L2());
  CHECK(down_set(l2, 0).members == std::vector<ElementId>{0});
  const auto p = build_pfn_algebra(2, 2);
  const ElementId a = pfn22({{{0, 1}, {1, 0}}});
  const Subalgebra d = down_set(p, a);
  std::vector<ElementId> expected{pfn22({}), pfn22({{{0, 1}}}), pfn22({{{1, 0}}}), a};
  std::sort(expected.begin(), expected.end());
  CHECK(d.members == expected);
  CHECK(is_commutative(d.lattice));
  CHECK(down_set(p, 0).members == std::vector<ElementId>{0});
  CHECK_THROWS_AS(subalgebra(validated(oracle::m3()), {1, 2}), ConsistencyError);
}

TEST_CASE("restriction examples") {
  const auto p = build_pfn_algebra(2, 2);
  const DPartition d = green_D(p);
  const ElementId a = pfn22({{{0, 1}, {1, 0}}});
  CHECK(restriction(p, d, a, d.class_of[a]) == a);
  const ElementId target = pfn22({{{1, 0}}});
  CHECK(restriction(p, d, a, d.class_of[target]) == target);
  CHECK(restriction(p, d, a, d.class_of[0]) == 0);
  CHECK_THROWS_AS(restriction(p, d, target, d.class_of[a]), PreconditionError);
}

TEST_CASE("restriction composes and preserves the class order") {
  const auto p = build_pfn_algebra(2, 2);
  const DPartition d = green_D(p);
  for (ElementId a = 0; a < p.order(); ++a) {
    for (ClassId u = 0; u < d.size(); ++u) {
      if (!d.leq(u, d.class_of[a])) continue;
      const ElementId au = restriction(p, d, a, u);
      for (ClassId v = 0; v < d.size(); ++v) {
        if (!d.leq(v, d.class_of[a])) continue;
        CHECK(natural_leq(p, au, restriction(p, d, a, v)) == d.leq(u, v));
        if (d.leq(v, u)) CHECK(restriction(p, d, au, v) == restriction(p, d, a, v));
      }
    }
  }
}

TEST_CASE("property: validator agrees with the definitional oracle on all small table pairs") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::size_t cells = n * n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * cells; ++i) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<ElementId> m(cells), j(cells);
      std::size_t c = code;
      for (auto& x : m) x = static_cast<ElementId>(c % n), c /= n;
      for (auto& x : j) x = static_cast<ElementId>(c % n), c /= n;
      const auto s = FiniteSkewLattice::from_tables(n, m, j);
      const Certificate cert = validate_skew_axioms(s);
      CHECK(cert.verdict == oracle::is_skew_lattice(n, m, j));
      if (!cert.verdict) CHECK(witness_violates(s, *cert.violation()));
    }
  }
}

TEST_CASE("property: census invariants of the core module") {
  for (const auto& s : census_upto4()) {
    CAPTURE(s.order());
    CHECK(check_identity(s, Identity::kRegular).verdict);
    CHECK(check_identity(s, Identity::kNormal).verdict == oracle::normal(s));
    CHECK(check_identity(s, Identity::kDistributive).verdict == oracle::distributive(s));
    CHECK(check_identity(s, Identity::kStronglyDistributive).verdict == oracle::strongly_distributive(s));
    CHECK(check_symmetric(s).verdict == oracle::symmetric(s));
    CHECK(is_commutative(s) == oracle::commutative(s));
    CHECK(find_zero(s) == oracle::zero(s));
    for (ElementId a = 0; a < s.order(); ++a) {
      for (ElementId b = 0; b < s.order(); ++b) {
        CHECK(natural_leq(s, a, b) == oracle::leq_by_join(s, a, b));
        CHECK(oracle::d_related(s, a, b) == oracle::d_related_by_join(s, a, b));
      }
    }
    const DPartition d = green_D(s);
    CHECK(d.size() == oracle::d_class_count(s));
    const QuotientLattice q = quotient(s, d);
    CHECK(is_commutative(q.lattice));
    CHECK(is_homomorphism({s, q.lattice, q.projection}).verdict);
    const bool sd = check_identity(s, Identity::kStronglyDistributive).verdict;
    CHECK(sd == (check_symmetric(s).verdict && check_identity(s, Identity::kDistributive).verdict &&
                 check_identity(s, Identity::kNormal).verdict));
    bool down_sets_commutative = true;
    for (ElementId a = 0; a < s.order(); ++a) down_sets_commutative &= is_commutative(down_set(s, a).lattice);
    CHECK(check_identity(s, Identity::kNormal).verdict == down_sets_commutative);
  }
}

TEST_CASE("property: homomorphisms map commuting subsets to commuting subsets") {
  for (const auto& s : census_upto4()) {
    const QuotientLattice q = quotient(s);
    for (const auto& c : enumerate_commuting_subsets(s)) {
      std::vector<ElementId> image;
      for (ElementId a : c.members()) image.push_back(q.projection[a]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      CHECK(is_commuting(q.lattice, image));
    }
  }
  // The window inclusion om_window(k) -> om_window(k + 1).
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto small = om_window(k);
    const auto big = om_window(k + 1);
    std::vector<ElementId> map;
    for (ElementId a = 0; a < small.order(); ++a) map.push_back(om_window_id(k + 1, om_window_element(k, a)));
    CHECK(is_homomorphism({small, big, map}).verdict);
    for (const auto& c : enumerate_commuting_subsets(small)) {
      std::vector<ElementId> image;
      for (ElementId a : c.members()) image.push_back(map[a]);
      std::sort(image.begin(), image.end());
      CHECK(is_commuting(big, image));
    }
  }
}
