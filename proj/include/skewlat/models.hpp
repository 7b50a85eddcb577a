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

#ifndef SKEWLAT_MODELS_HPP
#define SKEWLAT_MODELS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewlat/core.hpp"

namespace skewlat {

/// Size limit for the finite model builders. Overridden by the environment
/// variable SKEWLAT_ORDER_CAP when set.
std::size_t builder_order_cap();

// ---------------------------------------------------------------------------
// Partial functions A -> B

/// A finite partial function, stored as its graph.
struct PartialFunction {
  std::map<std::uint64_t, std::uint64_t> graph;

  std::set<std::uint64_t> domain() const;
  friend bool operator==(const PartialFunction&, const PartialFunction&) = default;
};

/// f ^ g = f restricted to dom(f) and dom(g).
PartialFunction pfn_meet(const PartialFunction& f, const PartialFunction& g);
/// f v g = g together with f restricted to dom(f) minus dom(g).
PartialFunction pfn_join(const PartialFunction& f, const PartialFunction& g);

std::string pfn_label(const PartialFunction& f);

/// The skew lattice of all partial functions {0..m-1} -> {0..b-1}. Element id
/// k encodes a function in base b+1: digit i (least significant first) is 0
/// when i is undefined and v+1 when i maps to v. Zero is the empty function
/// (id 0). Throws PreconditionError above builder_order_cap().
FiniteSkewLattice build_pfn_algebra(std::size_t domain_size, std::size_t codomain_size);

/// Decodes an element id of build_pfn_algebra(domain_size, codomain_size).
PartialFunction pfn_decode(std::size_t domain_size, std::size_t codomain_size, ElementId id);
ElementId pfn_encode(std::size_t domain_size, std::size_t codomain_size, const PartialFunction& f);

/// Runs the structural facts known for P(m, b) against a built algebra: skew
/// lattice axioms, strong distributivity, left-handedness, zero = empty
/// function, D-classes = domains, natural order = restriction, and S/D
/// isomorphic to the Boolean lattice of subsets of an m-set (via the domain
/// map). One CaseCheck per fact.
Certificate verify_pfn_algebra(const FiniteSkewLattice& s, std::size_t domain_size, std::size_t codomain_size);

// ---------------------------------------------------------------------------
// N with two incomparable tops

/// Element of N + {inf_a, inf_b}: naturals form a chain below both infinities,
/// and the two infinities form a left-handed two-element D-class.
class SymbolicElement {
 public:
  enum class Kind : std::uint8_t { kNat, kInfA, kInfB };

  static SymbolicElement nat(std::uint64_t n) { return SymbolicElement(Kind::kNat, n); }
  static SymbolicElement inf_a() { return SymbolicElement(Kind::kInfA, 0); }
  static SymbolicElement inf_b() { return SymbolicElement(Kind::kInfB, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_nat() const noexcept { return kind_ == Kind::kNat; }
  /// Meaningful only for naturals.
  std::uint64_t value() const noexcept { return value_; }

  std::string to_string() const;

  friend auto operator<=>(const SymbolicElement&, const SymbolicElement&) = default;

 private:
  SymbolicElement(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::uint64_t value_;
};

SymbolicElement om_meet(SymbolicElement x, SymbolicElement y);
SymbolicElement om_join(SymbolicElement x, SymbolicElement y);
/// Natural partial order induced by om_meet.
bool om_leq(SymbolicElement x, SymbolicElement y);

/// The operations a witness verifier runs against. omega_ops() is the real
/// model; tests substitute mutated orders to confirm the verifiers can fail.
struct OmegaOps {
  std::function<SymbolicElement(SymbolicElement, SymbolicElement)> meet;
  std::function<SymbolicElement(SymbolicElement, SymbolicElement)> join;
  std::function<bool(SymbolicElement, SymbolicElement)> leq;
};
OmegaOps omega_ops();

/// Finite truncation on {Nat(0..k), InfA, InfB}: Nat(i) has id i, InfA id
/// k+1, InfB id k+2; zero is Nat(0).
FiniteSkewLattice om_window(std::size_t k);
SymbolicElement om_window_element(std::size_t k, ElementId id);
ElementId om_window_id(std::size_t k, SymbolicElement x);

/// Case analysis showing the naturals have no join: every Nat(n), n <= k,
/// lies below both infinities; the naturals climb strictly, so none of them
/// bounds the rest; the two infinities are incomparable, so neither upper
/// bound is least. Each CaseCheck is one om_leq evaluation (negated where the
/// claim is a non-relation), giving 4k + 4 checks.
Certificate om_verify_no_join_of_naturals(std::size_t k, const OmegaOps& ops = omega_ops());

/// Case analysis showing {InfA, InfB} has no infimum: every Nat(n), n <= k,
/// is a common lower bound, the naturals climb strictly (no greatest common
/// lower bound among them), and no member of the pair is itself a lower bound
/// of the pair. `pair` defaults to {InfA, InfB}; passing a different target
/// set runs the same analysis on it.
Certificate om_verify_no_infimum_of_infs(std::size_t k, const OmegaOps& ops = omega_ops(),
                                         const std::vector<SymbolicElement>& pair = {SymbolicElement::inf_a(),
                                                                                     SymbolicElement::inf_b()});

// ---------------------------------------------------------------------------
// Partial functions N -> N with finite image

/// A finite or cofinite subset of N.
class FinCofinSet {
 public:
  static FinCofinSet fin(std::set<std::uint64_t> members) { return FinCofinSet(false, std::move(members)); }
  static FinCofinSet cofin(std::set<std::uint64_t> excluded) { return FinCofinSet(true, std::move(excluded)); }
  static FinCofinSet empty() { return fin({}); }
  static FinCofinSet all() { return cofin({}); }

  bool is_cofinite() const noexcept { return cofinite_; }
  /// Members when finite, excluded points when cofinite.
  const std::set<std::uint64_t>& points() const noexcept { return points_; }

  bool contains(std::uint64_t x) const { return cofinite_ != (points_.count(x) != 0); }
  bool is_empty() const noexcept { return !cofinite_ && points_.empty(); }

  FinCofinSet complement() const { return FinCofinSet(!cofinite_, points_); }
  FinCofinSet intersect(const FinCofinSet& other) const;
  FinCofinSet unite(const FinCofinSet& other) const;
  FinCofinSet minus(const FinCofinSet& other) const { return intersect(other.complement()); }

  std::string to_string() const;

  friend bool operator==(const FinCofinSet&, const FinCofinSet&) = default;

 private:
  FinCofinSet(bool cofinite, std::set<std::uint64_t> points) : cofinite_(cofinite), points_(std::move(points)) {}
  bool cofinite_;
  std::set<std::uint64_t> points_;
};

/// A partial function N -> N with finite image, stored as its nonempty
/// fibers sorted by value.
class FiniteImageElement {
 public:
  struct Fiber {
    std::uint64_t value;
    FinCofinSet preimage;
    friend bool operator==(const Fiber&, const Fiber&) = default;
  };

  /// Drops empty fibers and sorts by value. Throws StructuralError on
  /// repeated values or overlapping preimages.
  explicit FiniteImageElement(std::vector<Fiber> fibers);
  FiniteImageElement() = default;

  const std::vector<Fiber>& fibers() const noexcept { return fibers_; }
  FinCofinSet domain() const;
  std::optional<std::uint64_t> at(std::uint64_t x) const;
  std::size_t image_size() const noexcept { return fibers_.size(); }

  std::string to_string() const;

  friend bool operator==(const FiniteImageElement&, const FiniteImageElement&) = default;

 private:
  std::vector<Fiber> fibers_;
};

FiniteImageElement fi_meet(const FiniteImageElement& f, const FiniteImageElement& g);
FiniteImageElement fi_join(const FiniteImageElement& f, const FiniteImageElement& g);

/// Joins the one-point maps {0->0}, {1->1}, ..., {k-1->k-1} in turn and
/// records (step, image size). Throws ConsistencyError if a partial join is
/// not the identity on {0..step}.
std::vector<std::pair<std::int64_t, std::int64_t>> fi_one_point_chain(std::size_t k);

}  // namespace skewlat

#endif  // SKEWLAT_MODELS_HPP
