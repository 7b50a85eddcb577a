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
#include "skewlat/completeness.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/frames.hpp"
#include "skewlat/models.hpp"

using namespace skewlat;

namespace {

PartialFunction to_pfn(const oracle::Pfn& f) {
  PartialFunction p;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= 0) p.graph[i] = static_cast<std::uint64_t>(f[i]);
  return p;
}

using Fiber = FiniteImageElement::Fiber;

FiniteImageElement fin_map(std::vector<std::pair<std::uint64_t, std::set<std::uint64_t>>> fibers) {
  std::vector<Fiber> fs;
  for (auto& [v, pre] : fibers) fs.push_back({v, FinCofinSet::fin(pre)});
  return FiniteImageElement(fs);
}

}  // namespace

TEST_CASE("P(1,2) has order 3, zero the empty function, one two-element top class") {
  const auto p = build_pfn_algebra(1, 2);
  CHECK(p.order() == 3);
  CHECK(p.zero() == ElementId{0});
  CHECK(pfn_decode(1, 2, 0).graph.empty());
  const DPartition d = green_D(p);
  REQUIRE(d.top_class);
  CHECK(d.classes[*d.top_class].size() == 2);
}

TEST_CASE("P(2,2) has order 9 and four classes") {
  const auto p = build_pfn_algebra(2, 2);
  CHECK(p.order() == 9);
  CHECK(quotient(p).lattice.order() == 4);
  CHECK(p.label(0) == "{}");
}

TEST_CASE("join in P(2,2) follows the override formula") {
  const PartialFunction f{{{0, 0}}};
  const PartialFunction g{{{0, 1}, {1, 0}}};
  CHECK(pfn_join(f, g) == g);
  CHECK(pfn_join(g, f) == PartialFunction{{{0, 0}, {1, 0}}});
  const auto p = build_pfn_algebra(2, 2);
  CHECK(p.join(pfn_encode(2, 2, f), pfn_encode(2, 2, g)) == pfn_encode(2, 2, g));
  CHECK(pfn_decode(2, 2, p.join(pfn_encode(2, 2, g), pfn_encode(2, 2, f))) == PartialFunction{{{0, 0}, {1, 0}}});
}

TEST_CASE("pfn tables agree with the value-vector oracle") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t b = 1; b <= 3; ++b) {
      const auto s = build_pfn_algebra(m, b);
      const auto fs = oracle::all_pfns(m, b);
      REQUIRE(fs.size() == s.order());
      for (const auto& f : fs) {
        for (const auto& g : fs) {
          const ElementId x = pfn_encode(m, b, to_pfn(f));
          const ElementId y = pfn_encode(m, b, to_pfn(g));
          CHECK(pfn_decode(m, b, s.meet(x, y)) == to_pfn(oracle::pfn_meet(f, g)));
          CHECK(pfn_decode(m, b, s.join(x, y)) == to_pfn(oracle::pfn_join(f, g)));
        }
      }
    }
  }
}

TEST_CASE("P(m,b) structural facts hold for m, b <= 3") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t b = 1; b <= 3; ++b) {
      CAPTURE(m);
      CAPTURE(b);
      const auto s = build_pfn_algebra(m, b);
      const Certificate c = verify_pfn_algebra(s, m, b);
      CHECK(c.verdict);
      const auto q = quotient(s).lattice;
      CHECK(q.order() == (std::size_t{1} << m));
      CHECK(is_boolean_lattice(q));
      CHECK(oracle::strongly_distributive(s));
    }
  }
}

TEST_CASE("pfn builder preconditions and the order cap") {
  CHECK_THROWS_AS(build_pfn_algebra(0, 2), PreconditionError);
  CHECK_THROWS_AS(build_pfn_algebra(20, 20), PreconditionError);
  CHECK_THROWS_AS(pfn_decode(2, 2, 9), PreconditionError);
  CHECK_THROWS_AS(pfn_encode(2, 2, PartialFunction{{{5, 0}}}), PreconditionError);
}

TEST_CASE("SKEWLAT_ORDER_CAP overrides the builder cap") {
  setenv("SKEWLAT_ORDER_CAP", "8", 1);
  CHECK_THROWS_AS(build_pfn_algebra(2, 2), PreconditionError);
  setenv("SKEWLAT_ORDER_CAP", "junk", 1);
  CHECK_THROWS_AS(builder_order_cap(), PreconditionError);
  unsetenv("SKEWLAT_ORDER_CAP");
  CHECK(build_pfn_algebra(2, 2).order() == 9);
}

TEST_CASE("omega operations") {
  const auto A = SymbolicElement::inf_a();
  const auto B = SymbolicElement::inf_b();
  const auto N = [](std::uint64_t n) { return SymbolicElement::nat(n); };
  CHECK(om_meet(A, B) == A);
  CHECK(om_meet(B, A) == B);
  CHECK(om_join(A, B) == B);
  CHECK(om_join(B, A) == A);
  CHECK(om_join(N(3), N(7)) == N(7));
  CHECK(om_meet(N(3), N(7)) == N(3));
  CHECK(om_meet(N(3), A) == N(3));
  CHECK(om_join(N(3), B) == B);
  CHECK_FALSE(om_leq(A, B));
  CHECK_FALSE(om_leq(B, A));
  CHECK(om_leq(N(1000), A));
  CHECK(om_leq(N(2), N(5)));
  CHECK_FALSE(om_leq(A, N(5)));
}

TEST_CASE("omega windows") {
  CHECK(om_window(1).order() == 4);
  const auto w = om_window(5);
  CHECK(w.zero() == ElementId{0});
  CHECK(check_identity(w, Identity::kLeftHanded).verdict);
  CHECK(check_identity(w, Identity::kStronglyDistributive).verdict);
  const auto missing = commutation_graph(w).missing_edges();
  REQUIRE(missing.size() == 1);
  CHECK(missing[0] == std::make_pair(ElementId{6}, ElementId{7}));
  CHECK(w.label(6) == "inf_a");
  CHECK_THROWS_AS(om_window(0), PreconditionError);
  for (ElementId a = 0; a < w.order(); ++a) CHECK(om_window_id(5, om_window_element(5, a)) == a);
}

TEST_CASE("no join of the naturals") {
  const Certificate one = om_verify_no_join_of_naturals(1);
  CHECK(one.verdict);
  CHECK(std::get<CaseAnalysis>(one.witness).checks.size() == 8);
  const Certificate hundred = om_verify_no_join_of_naturals(100);
  CHECK(hundred.verdict);
  CHECK(std::get<CaseAnalysis>(hundred.witness).checks.size() == 404);
}

TEST_CASE("mutated order breaks the no-join analysis") {
  OmegaOps ops = omega_ops();
  ops.leq = [](SymbolicElement x, SymbolicElement y) {
    if (x == SymbolicElement::inf_a() && y == SymbolicElement::inf_b()) return true;
    return om_leq(x, y);
  };
  const Certificate c = om_verify_no_join_of_naturals(3, ops);
  CHECK_FALSE(c.verdict);
  CHECK(std::get<CaseAnalysis>(c.witness).failures() == 1);
}

TEST_CASE("no infimum of the two infinities") {
  CHECK(om_verify_no_infimum_of_infs(1).verdict);
  CHECK(om_verify_no_infimum_of_infs(50).verdict);
  const Certificate single = om_verify_no_infimum_of_infs(3, omega_ops(), {SymbolicElement::inf_a()});
  CHECK_FALSE(single.verdict);
  CHECK(single.note == "infimum exists: inf_a");
}

TEST_CASE("FinCofinSet algebra agrees with pointwise membership on a window") {
  const std::vector<FinCofinSet> sets{
      FinCofinSet::empty(),          FinCofinSet::all(),           FinCofinSet::fin({0, 3, 7}),
      FinCofinSet::fin({3, 150}),    FinCofinSet::cofin({3}),      FinCofinSet::cofin({0, 7, 199}),
      FinCofinSet::fin({200}),       FinCofinSet::cofin({1, 2, 3})};
  for (const auto& x : sets) {
    for (const auto& y : sets) {
      const auto i = x.intersect(y);
      const auto u = x.unite(y);
      const auto d = x.minus(y);
      for (std::uint64_t p = 0; p <= 200; ++p) {
        CHECK(i.contains(p) == (x.contains(p) && y.contains(p)));
        CHECK(u.contains(p) == (x.contains(p) || y.contains(p)));
        CHECK(d.contains(p) == (x.contains(p) && !y.contains(p)));
      }
      CHECK(i.is_cofinite() == (x.is_cofinite() && y.is_cofinite()));
      CHECK(u.is_cofinite() == (x.is_cofinite() || y.is_cofinite()));
    }
  }
}

TEST_CASE("finite-image operations") {
  const auto f = fin_map({{5, {3}}});
  const auto g = fin_map({{9, {3, 4}}});
  CHECK(fi_meet(f, f) == f);
  CHECK(fi_join(f, g) == g);
  const auto gf = fi_join(g, f);
  CHECK(gf.domain() == FinCofinSet::fin({3, 4}));
  CHECK(gf.at(3) == 5U);
  CHECK(gf.at(4) == 9U);
  CHECK_FALSE(gf.at(5).has_value());
  const FiniteImageElement total({{1, FinCofinSet::all()}});
  CHECK(fi_join(total, g).domain() == FinCofinSet::all());
  CHECK(fi_join(g, total).domain() == FinCofinSet::all());
  CHECK(fi_join(g, total) == total);
}

TEST_CASE("finite-image representation invariants") {
  CHECK_THROWS_AS(FiniteImageElement({{1, FinCofinSet::fin({1})}, {1, FinCofinSet::fin({2})}}), StructuralError);
  CHECK_THROWS_AS(FiniteImageElement({{1, FinCofinSet::fin({1, 2})}, {2, FinCofinSet::fin({2})}}), StructuralError);
  CHECK_THROWS_AS(FiniteImageElement({{1, FinCofinSet::cofin({})}, {2, FinCofinSet::cofin({5})}}), StructuralError);
  CHECK(FiniteImageElement({{1, FinCofinSet::empty()}}).image_size() == 0);
}

TEST_CASE("finite-image operations agree with partial functions on a window") {
  const auto fs = oracle::all_pfns(3, 2);
  auto lift = [](const oracle::Pfn& f) {
    std::map<std::uint64_t, std::set<std::uint64_t>> by_value;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] >= 0) by_value[static_cast<std::uint64_t>(f[i])].insert(i);
    std::vector<Fiber> fibers;
    for (auto& [v, pre] : by_value) fibers.push_back({v, FinCofinSet::fin(pre)});
    return FiniteImageElement(fibers);
  };
  for (const auto& f : fs) {
    for (const auto& g : fs) {
      CHECK(fi_meet(lift(f), lift(g)) == lift(oracle::pfn_meet(f, g)));
      CHECK(fi_join(lift(f), lift(g)) == lift(oracle::pfn_join(f, g)));
    }
  }
}

TEST_CASE("one-point chain") {
  CHECK(fi_one_point_chain(1) == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}});
  CHECK(fi_one_point_chain(3) == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {1, 2}, {2, 3}});
  const auto fifty = fi_one_point_chain(50);
  REQUIRE(fifty.size() == 50);
  CHECK(fifty.back() == std::make_pair(std::int64_t{49}, std::int64_t{50}));
  for (std::size_t i = 1; i < fifty.size(); ++i) CHECK(fifty[i].second > fifty[i - 1].second);
}
