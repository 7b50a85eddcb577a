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

#include "skewlat/frames.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "skewlat/completeness.hpp"

namespace skewlat {

namespace {

void require_lattice(const FiniteSkewLattice& l) {
  require_validated(l);
  if (!is_commutative(l)) throw PreconditionError("frame check requires a commutative lattice");
}

// In a finite lattice both bounds exist; checked rather than assumed.
bool bounded(const FiniteSkewLattice& l) {
  ElementId top = 0;
  for (ElementId a = 1; a < l.order(); ++a) top = l.join(top, a);
  for (ElementId a = 0; a < l.order(); ++a) {
    if (l.join(a, top) != top) return false;
  }
  return find_zero(l).has_value();
}

}  // namespace

FrameVerdict is_frame_exhaustive(const FiniteSkewLattice& l) {
  require_lattice(l);
  const std::size_t n = l.order();
  if (n >= 63) throw PreconditionError("exhaustive frame check is limited to small orders");
  if (!bounded(l)) return {false, std::nullopt};
  std::vector<ElementId> ys;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ys.clear();
    for (std::uint64_t m = mask; m != 0; m &= m - 1) ys.push_back(static_cast<ElementId>(std::countr_zero(m)));
    ElementId sup = ys.front();
    for (ElementId y : ys) sup = l.join(sup, y);
    for (ElementId x = 0; x < n; ++x) {
      ElementId rhs = l.meet(x, ys.front());
      for (ElementId y : ys) rhs = l.join(rhs, l.meet(x, y));
      if (l.meet(x, sup) != rhs) return {false, std::make_pair(x, ys)};
    }
  }
  return {true, std::nullopt};
}

FrameVerdict is_frame_pairwise(const FiniteSkewLattice& l) {
  require_lattice(l);
  if (!bounded(l)) return {false, std::nullopt};
  const auto n = static_cast<ElementId>(l.order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return {false, std::make_pair(x, y == z ? std::vector<ElementId>{y} : std::vector<ElementId>{y, z})};
        }
      }
    }
  }
  return {true, std::nullopt};
}

FrameVerdict is_frame(const FiniteSkewLattice& l) {
  return l.order() < kExhaustiveFrameOrder ? is_frame_exhaustive(l) : is_frame_pairwise(l);
}

bool is_boolean_lattice(const FiniteSkewLattice& l) {
  require_lattice(l);
  if (!bounded(l) || !is_frame_pairwise(l).is_frame) return false;
  const ElementId bottom = *find_zero(l);
  ElementId top = 0;
  for (ElementId a = 1; a < l.order(); ++a) top = l.join(top, a);
  for (ElementId a = 0; a < l.order(); ++a) {
    bool complemented = false;
    for (ElementId b = 0; b < l.order() && !complemented; ++b) {
      complemented = l.meet(a, b) == bottom && l.join(a, b) == top;
    }
    if (!complemented) return false;
  }
  return true;
}

namespace {

// V { f(c) : c in subset }, or nullopt when no supremum exists.
template <class F>
std::optional<ElementId> sup_of_image(const FiniteSkewLattice& s, const std::vector<ElementId>& subset, F f) {
  std::vector<ElementId> image;
  for (ElementId c : subset) image.push_back(f(c));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return sup_natural(s, image);
}

// Evaluates one infinite-distributivity instance. Returns true on violation.
bool infinite_law_fails(const FiniteSkewLattice& s, bool left_law, ElementId fixed,
                        const std::vector<ElementId>& subset) {
  const std::optional<ElementId> sup = sup_natural(s, subset);
  if (!sup) return true;
  std::optional<ElementId> rhs;
  ElementId lhs;
  if (left_law) {
    lhs = s.meet(*sup, fixed);
    rhs = sup_of_image(s, subset, [&](ElementId x) { return s.meet(x, fixed); });
  } else {
    lhs = s.meet(fixed, *sup);
    rhs = sup_of_image(s, subset, [&](ElementId y) { return s.meet(fixed, y); });
  }
  return !rhs || *rhs != lhs;
}

}  // namespace

Certificate is_ncframe(const FiniteSkewLattice& s) {
  require_validated(s);
  Certificate sd = check_identity(s, Identity::kStronglyDistributive);
  if (!sd.verdict) {
    sd.note = "not strongly distributive";
    return sd;
  }
  const std::optional<ElementId> zero = effective_zero(s);
  if (!zero) return Certificate::fail({}, "no zero");
  std::optional<Certificate> failure;
  for_each_commuting_subset(s, [&](const CommutingSubset& c) {
    const auto& members = c.members();
    if (!sup_natural(s, members)) {
      failure = Certificate::fail(SubsetWitness{members, "no supremum"}, "not join complete");
      return false;
    }
    for (ElementId e = 0; e < s.order(); ++e) {
      if (infinite_law_fails(s, true, e, members)) {
        failure = Certificate::fail(Violation{kLeftInfiniteLaw, {e}, members}, "infinite distributive law fails");
        return false;
      }
      if (infinite_law_fails(s, false, e, members)) {
        failure = Certificate::fail(Violation{kRightInfiniteLaw, {e}, members}, "infinite distributive law fails");
        return false;
      }
    }
    return true;
  });
  if (failure) return *failure;
  return Certificate::pass(ElementWitness{*zero});
}

bool frame_witness_violates(const FiniteSkewLattice& s, const Violation& v) {
  if (v.tuple.size() != 1 || v.subset.empty()) return false;
  for (ElementId a : v.subset) {
    if (a >= s.order()) return false;
  }
  if (v.tuple[0] >= s.order() || !is_commuting(s, v.subset)) return false;
  if (v.law == kLeftInfiniteLaw) return infinite_law_fails(s, true, v.tuple[0], v.subset);
  if (v.law == kRightInfiniteLaw) return infinite_law_fails(s, false, v.tuple[0], v.subset);
  return false;
}

Certificate check_theorem_ncframes(const FiniteSkewLattice& s) {
  require_validated(s);
  if (!check_identity(s, Identity::kStronglyDistributive).verdict) {
    throw PreconditionError("theorem requires a strongly distributive skew lattice");
  }
  if (!effective_zero(s)) throw PreconditionError("theorem requires a skew lattice with 0");
  if (!check_JC(s).verdict) throw PreconditionError("theorem requires a join complete skew lattice");
  const bool nc = is_ncframe(s).verdict;
  const bool frame = is_frame(quotient(s).lattice).is_frame;
  CaseAnalysis sides{{{"S is a noncommutative frame", nc}, {"S/D is a frame", frame}}};
  const bool agree = nc == frame;
  return Certificate{agree, std::move(sides), agree ? "" : "counterexample: the two sides disagree"};
}

}  // namespace skewlat
