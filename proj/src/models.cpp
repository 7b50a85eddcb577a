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

#include "skewlat/models.hpp"

#include <algorithm>
#include <iterator>

#include "env.hpp"
#include "skewlat/frames.hpp"

namespace skewlat {

std::size_t builder_order_cap() {
  constexpr std::size_t kDefaultCap = 4096;
  return detail::order_cap_override().value_or(kDefaultCap);
}

// ---------------------------------------------------------------------------
// Partial functions

std::set<std::uint64_t> PartialFunction::domain() const {
  std::set<std::uint64_t> d;
  for (const auto& [x, v] : graph) d.insert(x);
  return d;
}

PartialFunction pfn_meet(const PartialFunction& f, const PartialFunction& g) {
  PartialFunction r;
  for (const auto& [x, v] : f.graph) {
    if (g.graph.count(x) != 0) r.graph.emplace(x, v);
  }
  return r;
}

PartialFunction pfn_join(const PartialFunction& f, const PartialFunction& g) {
  PartialFunction r = g;
  for (const auto& [x, v] : f.graph) r.graph.emplace(x, v);  // no-op where g is defined
  return r;
}

std::string pfn_label(const PartialFunction& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, v] : f.graph) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(x) + ":" + std::to_string(v);
  }
  return out + "}";
}

namespace {

std::size_t pfn_order(std::size_t domain_size, std::size_t codomain_size) {
  if (domain_size == 0 || codomain_size == 0) throw PreconditionError("domain and codomain sizes must be positive");
  const std::size_t cap = builder_order_cap();
  std::size_t order = 1;
  for (std::size_t i = 0; i < domain_size; ++i) {
    if (order > cap / (codomain_size + 1)) {
      throw PreconditionError("P(" + std::to_string(domain_size) + "," + std::to_string(codomain_size) +
                              ") exceeds the order cap " + std::to_string(cap));
    }
    order *= codomain_size + 1;
  }
  if (order > cap) throw PreconditionError("order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  return order;
}

}  // namespace

PartialFunction pfn_decode(std::size_t domain_size, std::size_t codomain_size, ElementId id) {
  PartialFunction f;
  std::size_t rest = id;
  for (std::size_t x = 0; x < domain_size; ++x) {
    const std::size_t digit = rest % (codomain_size + 1);
    rest /= codomain_size + 1;
    if (digit != 0) f.graph.emplace(x, digit - 1);
  }
  if (rest != 0) throw PreconditionError("id " + std::to_string(id) + " does not encode a partial function");
  return f;
}

ElementId pfn_encode(std::size_t domain_size, std::size_t codomain_size, const PartialFunction& f) {
  std::size_t id = 0;
  std::size_t place = 1;
  for (std::size_t x = 0; x < domain_size; ++x) {
    auto it = f.graph.find(x);
    if (it != f.graph.end()) {
      if (it->second >= codomain_size) throw PreconditionError("value out of codomain");
      id += place * (it->second + 1);
    }
    place *= codomain_size + 1;
  }
  if (!f.graph.empty() && f.graph.rbegin()->first >= domain_size) throw PreconditionError("point out of domain");
  return static_cast<ElementId>(id);
}

FiniteSkewLattice build_pfn_algebra(std::size_t domain_size, std::size_t codomain_size) {
  const std::size_t n = pfn_order(domain_size, codomain_size);
  std::vector<PartialFunction> elements;
  elements.reserve(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t id = 0; id < n; ++id) {
    elements.push_back(pfn_decode(domain_size, codomain_size, static_cast<ElementId>(id)));
    labels.push_back(pfn_label(elements.back()));
  }
  std::vector<ElementId> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet[a * n + b] = pfn_encode(domain_size, codomain_size, pfn_meet(elements[a], elements[b]));
      join[a * n + b] = pfn_encode(domain_size, codomain_size, pfn_join(elements[a], elements[b]));
    }
  }
  return validated(FiniteSkewLattice::from_tables(n, std::move(meet), std::move(join), ElementId{0}, std::move(labels)));
}

Certificate verify_pfn_algebra(const FiniteSkewLattice& s, std::size_t domain_size, std::size_t codomain_size) {
  CaseAnalysis r;
  const bool valid = validate_skew_axioms(s).verdict;
  r.checks.push_back({"skew lattice axioms", valid});
  if (!valid) return Certificate::fail(std::move(r), "not a skew lattice");
  const FiniteSkewLattice v = validated(s);
  const auto n = static_cast<ElementId>(v.order());
  std::vector<PartialFunction> fs;
  for (ElementId a = 0; a < n; ++a) fs.push_back(pfn_decode(domain_size, codomain_size, a));

  r.checks.push_back({"strongly distributive", check_identity(v, Identity::kStronglyDistributive).verdict});
  r.checks.push_back({"left-handed", check_identity(v, Identity::kLeftHanded).verdict});
  r.checks.push_back({"zero is the empty function", v.zero() == ElementId{0} && fs[0].graph.empty()});

  const DPartition d = green_D(v);
  bool keyed = true;
  bool restriction_order = true;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      keyed = keyed && ((d.class_of[a] == d.class_of[b]) == (fs[a].domain() == fs[b].domain()));
      // f <= g iff f = g restricted to dom(f) and dom(g).
      const bool below = fs[a] == pfn_meet(fs[b], fs[a]);
      restriction_order = restriction_order && (natural_leq(v, a, b) == below);
    }
  }
  r.checks.push_back({"D-classes are the domain classes", keyed});
  r.checks.push_back({"natural order is restriction", restriction_order});

  // Domain map S/D -> subsets of {0..m-1}, as bitmasks.
  const QuotientLattice q = quotient(v, d);
  const std::size_t k = q.lattice.order();
  std::vector<std::uint64_t> dom_mask(k, 0);
  for (ClassId c = 0; c < k; ++c) {
    for (auto x : fs[d.classes[c].front()].domain()) dom_mask[c] |= std::uint64_t{1} << x;
  }
  bool iso = k == (std::size_t{1} << domain_size);
  std::set<std::uint64_t> distinct(dom_mask.begin(), dom_mask.end());
  iso = iso && distinct.size() == k;
  for (ClassId u = 0; u < k && iso; ++u) {
    for (ClassId w = 0; w < k && iso; ++w) {
      iso = dom_mask[q.lattice.meet(u, w)] == (dom_mask[u] & dom_mask[w]) &&
            dom_mask[q.lattice.join(u, w)] == (dom_mask[u] | dom_mask[w]);
    }
  }
  r.checks.push_back({"S/D is the Boolean lattice of subsets of the domain", iso && is_boolean_lattice(q.lattice)});
  const bool ok = r.failures() == 0;
  return Certificate{ok, std::move(r), ok ? "" : "a structural fact failed"};
}

// ---------------------------------------------------------------------------
// N with two tops

std::string SymbolicElement::to_string() const {
  switch (kind_) {
    case Kind::kNat: return std::to_string(value_);
    case Kind::kInfA: return "inf_a";
    case Kind::kInfB: return "inf_b";
  }
  return "?";
}

SymbolicElement om_meet(SymbolicElement x, SymbolicElement y) {
  if (x.is_nat() && y.is_nat()) return x.value() <= y.value() ? x : y;
  if (x.is_nat()) return x;
  if (y.is_nat()) return y;
  // Both infinite: the left operand wins.
  return x;
}

SymbolicElement om_join(SymbolicElement x, SymbolicElement y) {
  if (x.is_nat() && y.is_nat()) return x.value() >= y.value() ? x : y;
  if (x.is_nat()) return y;
  if (y.is_nat()) return x;
  // Both infinite: the right operand wins.
  return y;
}

bool om_leq(SymbolicElement x, SymbolicElement y) { return om_meet(x, y) == x && om_meet(y, x) == x; }

OmegaOps omega_ops() { return OmegaOps{om_meet, om_join, om_leq}; }

SymbolicElement om_window_element(std::size_t k, ElementId id) {
  if (id <= k) return SymbolicElement::nat(id);
  if (id == k + 1) return SymbolicElement::inf_a();
  if (id == k + 2) return SymbolicElement::inf_b();
  throw PreconditionError("id " + std::to_string(id) + " outside om_window(" + std::to_string(k) + ")");
}

ElementId om_window_id(std::size_t k, SymbolicElement x) {
  switch (x.kind()) {
    case SymbolicElement::Kind::kNat:
      if (x.value() > k) throw PreconditionError(x.to_string() + " lies outside om_window(" + std::to_string(k) + ")");
      return static_cast<ElementId>(x.value());
    case SymbolicElement::Kind::kInfA: return static_cast<ElementId>(k + 1);
    case SymbolicElement::Kind::kInfB: return static_cast<ElementId>(k + 2);
  }
  return 0;
}

FiniteSkewLattice om_window(std::size_t k) {
  if (k == 0) throw PreconditionError("window size must be positive");
  const std::size_t n = k + 3;
  if (n > builder_order_cap()) throw PreconditionError("om_window(" + std::to_string(k) + ") exceeds the order cap");
  std::vector<ElementId> meet(n * n), join(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    const SymbolicElement x = om_window_element(k, static_cast<ElementId>(a));
    labels.push_back(x.to_string());
    for (std::size_t b = 0; b < n; ++b) {
      const SymbolicElement y = om_window_element(k, static_cast<ElementId>(b));
      meet[a * n + b] = om_window_id(k, om_meet(x, y));
      join[a * n + b] = om_window_id(k, om_join(x, y));
    }
  }
  return validated(FiniteSkewLattice::from_tables(n, std::move(meet), std::move(join), ElementId{0}, std::move(labels)));
}

namespace {

std::string leq_claim(SymbolicElement x, SymbolicElement y, bool expected) {
  return x.to_string() + (expected ? " <= " : " !<= ") + y.to_string();
}

void record(CaseAnalysis& record, const OmegaOps& ops, SymbolicElement x, SymbolicElement y, bool expected) {
  record.checks.push_back({leq_claim(x, y, expected), ops.leq(x, y) == expected});
}

// Clause (b) of both analyses: Nat(n) < Nat(n+1) for n < k.
void record_strict_chain(CaseAnalysis& r, const OmegaOps& ops, std::size_t k) {
  for (std::uint64_t n = 0; n < k; ++n) {
    record(r, ops, SymbolicElement::nat(n), SymbolicElement::nat(n + 1), true);
    record(r, ops, SymbolicElement::nat(n + 1), SymbolicElement::nat(n), false);
  }
}

}  // namespace

Certificate om_verify_no_join_of_naturals(std::size_t k, const OmegaOps& ops) {
  if (k == 0) throw PreconditionError("window size must be positive");
  const auto a = SymbolicElement::inf_a();
  const auto b = SymbolicElement::inf_b();
  CaseAnalysis r;
  for (std::uint64_t n = 0; n <= k; ++n) {
    record(r, ops, SymbolicElement::nat(n), a, true);
    record(r, ops, SymbolicElement::nat(n), b, true);
  }
  record_strict_chain(r, ops, k);
  record(r, ops, a, b, false);
  record(r, ops, b, a, false);
  const bool ok = r.failures() == 0;
  return Certificate{ok, std::move(r),
                     ok ? "upper bounds of the naturals are exactly inf_a and inf_b, which are incomparable"
                        : "case analysis failed"};
}

Certificate om_verify_no_infimum_of_infs(std::size_t k, const OmegaOps& ops,
                                         const std::vector<SymbolicElement>& pair) {
  if (k == 0) throw PreconditionError("window size must be positive");
  if (pair.empty()) throw PreconditionError("target set must be nonempty");
  CaseAnalysis r;
  for (std::uint64_t n = 0; n <= k; ++n) {
    for (const auto& t : pair) record(r, ops, SymbolicElement::nat(n), t, true);
  }
  record_strict_chain(r, ops, k);
  std::optional<SymbolicElement> member_bound;
  for (const auto& t : pair) {
    bool is_lower_bound = true;
    for (const auto& p : pair) is_lower_bound = is_lower_bound && ops.leq(t, p);
    r.checks.push_back({t.to_string() + " is not a lower bound of the pair", !is_lower_bound});
    if (is_lower_bound && !member_bound) member_bound = t;
  }
  const bool ok = r.failures() == 0;
  std::string note = ok ? "lower bounds are exactly the naturals, which have no greatest element" : "case analysis failed";
  if (member_bound) note = "infimum exists: " + member_bound->to_string();
  return Certificate{ok, std::move(r), std::move(note)};
}

// ---------------------------------------------------------------------------
// Finite-image partial functions

namespace {

std::set<std::uint64_t> set_intersection(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
std::set<std::uint64_t> set_union(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
std::set<std::uint64_t> set_difference(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string points_string(const std::set<std::uint64_t>& pts) {
  std::string out = "{";
  bool first = true;
  for (auto p : pts) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(p);
  }
  return out + "}";
}

}  // namespace

FinCofinSet FinCofinSet::intersect(const FinCofinSet& other) const {
  if (!cofinite_ && !other.cofinite_) return fin(set_intersection(points_, other.points_));
  if (!cofinite_) return fin(set_difference(points_, other.points_));
  if (!other.cofinite_) return fin(set_difference(other.points_, points_));
  return cofin(set_union(points_, other.points_));
}

FinCofinSet FinCofinSet::unite(const FinCofinSet& other) const {
  if (!cofinite_ && !other.cofinite_) return fin(set_union(points_, other.points_));
  if (!cofinite_) return cofin(set_difference(other.points_, points_));
  if (!other.cofinite_) return cofin(set_difference(points_, other.points_));
  return cofin(set_intersection(points_, other.points_));
}

std::string FinCofinSet::to_string() const {
  return (cofinite_ ? "Cofin" : "Fin") + points_string(points_);
}

FiniteImageElement::FiniteImageElement(std::vector<Fiber> fibers) {
  std::erase_if(fibers, [](const Fiber& f) { return f.preimage.is_empty(); });
  std::sort(fibers.begin(), fibers.end(), [](const Fiber& a, const Fiber& b) { return a.value < b.value; });
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (i > 0 && fibers[i].value == fibers[i - 1].value) {
      throw StructuralError("repeated fiber value " + std::to_string(fibers[i].value));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!fibers[i].preimage.intersect(fibers[j].preimage).is_empty()) {
        throw StructuralError("fibers for values " + std::to_string(fibers[j].value) + " and " +
                              std::to_string(fibers[i].value) + " overlap");
      }
    }
  }
  fibers_ = std::move(fibers);
}

FinCofinSet FiniteImageElement::domain() const {
  FinCofinSet d = FinCofinSet::empty();
  for (const auto& f : fibers_) d = d.unite(f.preimage);
  return d;
}

std::optional<std::uint64_t> FiniteImageElement::at(std::uint64_t x) const {
  for (const auto& f : fibers_) {
    if (f.preimage.contains(x)) return f.value;
  }
  return std::nullopt;
}

std::string FiniteImageElement::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fibers_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(fibers_[i].value) + ", " + fibers_[i].preimage.to_string() + ")";
  }
  return out + "}";
}

FiniteImageElement fi_meet(const FiniteImageElement& f, const FiniteImageElement& g) {
  const FinCofinSet dom_g = g.domain();
  std::vector<FiniteImageElement::Fiber> out;
  for (const auto& fiber : f.fibers()) out.push_back({fiber.value, fiber.preimage.intersect(dom_g)});
  return FiniteImageElement(std::move(out));
}

FiniteImageElement fi_join(const FiniteImageElement& f, const FiniteImageElement& g) {
  const FinCofinSet dom_g = g.domain();
  std::vector<FiniteImageElement::Fiber> out = g.fibers();
  for (const auto& fiber : f.fibers()) {
    FinCofinSet rest = fiber.preimage.minus(dom_g);
    auto same = std::find_if(out.begin(), out.end(), [&](const auto& o) { return o.value == fiber.value; });
    if (same != out.end()) {
      same->preimage = same->preimage.unite(rest);
    } else {
      out.push_back({fiber.value, std::move(rest)});
    }
  }
  return FiniteImageElement(std::move(out));
}

std::vector<std::pair<std::int64_t, std::int64_t>> fi_one_point_chain(std::size_t k) {
  if (k == 0) throw PreconditionError("chain length must be positive");
  std::vector<std::pair<std::int64_t, std::int64_t>> steps;
  FiniteImageElement acc;
  std::vector<FiniteImageElement::Fiber> identity;
  for (std::uint64_t n = 0; n < k; ++n) {
    acc = fi_join(acc, FiniteImageElement({{n, FinCofinSet::fin({n})}}));
    identity.push_back({n, FinCofinSet::fin({n})});
    if (!(acc == FiniteImageElement(identity))) {
      throw ConsistencyError("partial join at step " + std::to_string(n) + " is not the identity on {0.." +
                             std::to_string(n) + "}: " + acc.to_string());
    }
    steps.emplace_back(static_cast<std::int64_t>(n), static_cast<std::int64_t>(acc.image_size()));
  }
  return steps;
}

}  // namespace skewlat
