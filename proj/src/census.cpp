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

#include "skewlat/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

#include "env.hpp"
#include "skewlat/completeness.hpp"
#include "skewlat/frames.hpp"

namespace skewlat {

// ---------------------------------------------------------------------------
// Filters

namespace {

bool tri_accepts(Tri t, bool value) {
  switch (t) {
    case Tri::kIgnore: return true;
    case Tri::kRequire: return value;
    case Tri::kForbid: return !value;
  }
  return true;
}

Tri* filter_slot(CensusFilter& f, std::string_view name) {
  if (name == "zero") return &f.zero;
  if (name == "commutative") return &f.commutative;
  if (name == "strongly_distributive") return &f.strongly_distributive;
  if (name == "left_handed") return &f.left_handed;
  if (name == "right_handed") return &f.right_handed;
  if (name == "normal") return &f.normal;
  if (name == "symmetric") return &f.symmetric;
  if (name == "distributive") return &f.distributive;
  return nullptr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

CensusFilter CensusFilter::parse(std::string_view text) {
  CensusFilter f;
  if (trim(text).empty()) return f;
  for (std::string_view item : split(text, ',')) {
    Tri value = Tri::kRequire;
    if (!item.empty() && item.front() == '!') {
      value = Tri::kForbid;
      item.remove_prefix(1);
    }
    Tri* slot = filter_slot(f, item);
    if (slot == nullptr) throw PreconditionError("unknown census filter '" + std::string(item) + "'");
    *slot = value;
  }
  return f;
}

bool CensusFilter::is_trivial() const noexcept {
  return zero == Tri::kIgnore && commutative == Tri::kIgnore && strongly_distributive == Tri::kIgnore &&
         left_handed == Tri::kIgnore && right_handed == Tri::kIgnore && normal == Tri::kIgnore &&
         symmetric == Tri::kIgnore && distributive == Tri::kIgnore;
}

bool CensusFilter::matches(const FiniteSkewLattice& s) const {
  auto id = [&](Identity i) { return check_identity(s, i).verdict; };
  return tri_accepts(zero, effective_zero(s).has_value()) && tri_accepts(commutative, is_commutative(s)) &&
         tri_accepts(strongly_distributive, id(Identity::kStronglyDistributive)) &&
         tri_accepts(left_handed, id(Identity::kLeftHanded)) && tri_accepts(right_handed, id(Identity::kRightHanded)) &&
         tri_accepts(normal, id(Identity::kNormal)) && tri_accepts(symmetric, check_symmetric(s).verdict) &&
         tri_accepts(distributive, id(Identity::kDistributive));
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

CanonicalForm canonical_tables(std::size_t n, std::span<const ElementId> meet, std::span<const ElementId> join) {
  CanonicalForm best{n, {meet.begin(), meet.end()}, {join.begin(), join.end()}};
  std::vector<ElementId> q(n), p(n);  // q: new id -> old id, p = q^-1
  std::iota(q.begin(), q.end(), 0);
  std::vector<ElementId> cand(2 * n * n);
  std::vector<ElementId> best_flat(best.meet);
  best_flat.insert(best_flat.end(), best.join.begin(), best.join.end());
  while (std::next_permutation(q.begin(), q.end())) {
    for (std::size_t i = 0; i < n; ++i) p[q[i]] = static_cast<ElementId>(i);
    // Lexicographic comparison with early exit; `better` once a smaller
    // cell has been seen.
    bool better = false, worse = false;
    for (std::size_t k = 0; k < 2 * n * n && !worse; ++k) {
      const std::size_t cell = k % (n * n);
      const std::size_t i = cell / n, j = cell % n;
      const auto& table = k < n * n ? meet : join;
      cand[k] = p[table[q[i] * n + q[j]]];
      if (!better) {
        if (cand[k] < best_flat[k]) better = true;
        else if (cand[k] > best_flat[k]) worse = true;
      }
    }
    if (better) best_flat = cand;
  }
  best.meet.assign(best_flat.begin(), best_flat.begin() + static_cast<std::ptrdiff_t>(n * n));
  best.join.assign(best_flat.begin() + static_cast<std::ptrdiff_t>(n * n), best_flat.end());
  return best;
}

}  // namespace

CanonicalForm canonicalize(const FiniteSkewLattice& s) {
  require_validated(s);
  return canonical_tables(s.order(), s.meet_table(), s.join_table());
}

FiniteSkewLattice from_canonical(const CanonicalForm& form) {
  FiniteSkewLattice s = validated(FiniteSkewLattice::from_tables(form.order, form.meet, form.join));
  if (auto z = find_zero(s)) s = validated(s.with_zero(z));
  return s;
}

std::size_t census_order_cap(bool filtered) {
  return detail::order_cap_override().value_or(filtered ? 5 : 4);
}

// ---------------------------------------------------------------------------
// Strategy 1: pruned backtracking

namespace {

constexpr std::uint8_t kUnset = 0xff;

class PrunedSearch {
 public:
  explicit PrunedSearch(std::size_t n) : n_(n), meet_(n * n, kUnset), join_(n * n, kUnset) {
    for (std::size_t a = 0; a < n; ++a) {
      meet_[a * n + a] = static_cast<std::uint8_t>(a);
      join_[a * n + a] = static_cast<std::uint8_t>(a);
    }
    // Meet cells row-major, then join cells; the first n-1 are the meet's
    // first row, which is what the parallel split enumerates.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b) cells_.push_back(&meet_[a * n + b]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b) cells_.push_back(&join_[a * n + b]);
  }

  PrunedSearch(const PrunedSearch&) = delete;
  PrunedSearch& operator=(const PrunedSearch&) = delete;

  std::size_t prefix_cells() const { return n_ - 1; }

  /// Applies a prefix assignment; false if it is already inconsistent.
  bool set_prefix(const std::vector<std::uint8_t>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) *cells_[i] = values[i];
    return consistent();
  }

  void run_from(std::size_t depth, std::set<CanonicalForm>& out) {
    if (depth == cells_.size()) {
      std::vector<ElementId> m(meet_.begin(), meet_.end()), j(join_.begin(), join_.end());
      out.insert(canonical_tables(n_, m, j));
      return;
    }
    std::uint8_t* cell = cells_[depth];
    for (std::size_t v = 0; v < n_; ++v) {
      *cell = static_cast<std::uint8_t>(v);
      if (consistent()) run_from(depth + 1, out);
    }
    *cell = kUnset;
  }

 private:
  std::uint8_t m(std::uint8_t a, std::uint8_t b) const {
    return (a == kUnset || b == kUnset) ? kUnset : meet_[a * n_ + b];
  }
  std::uint8_t j(std::uint8_t a, std::uint8_t b) const {
    return (a == kUnset || b == kUnset) ? kUnset : join_[a * n_ + b];
  }

  // Every axiom instance whose cells are all assigned holds.
  bool consistent() const {
    const auto n = static_cast<std::uint8_t>(n_);
    for (std::uint8_t x = 0; x < n; ++x) {
      for (std::uint8_t y = 0; y < n; ++y) {
        const std::uint8_t xy_j = j(x, y), xy_m = m(x, y);
        std::uint8_t t;
        if ((t = m(x, xy_j)) != kUnset && t != x) return false;
        if ((t = m(xy_j, y)) != kUnset && t != y) return false;
        if ((t = j(x, xy_m)) != kUnset && t != x) return false;
        if ((t = j(xy_m, y)) != kUnset && t != y) return false;
        for (std::uint8_t z = 0; z < n; ++z) {
          std::uint8_t l = m(xy_m, z), r = m(x, m(y, z));
          if (l != kUnset && r != kUnset && l != r) return false;
          l = j(xy_j, z);
          r = j(x, j(y, z));
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    }
    return true;
  }

  std::size_t n_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
  std::vector<std::uint8_t*> cells_;
};

}  // namespace

std::vector<CanonicalForm> enumerate_by_pruned_search(std::size_t order, unsigned workers) {
  if (order == 0) throw PreconditionError("order must be positive");
  if (order > 16) throw PreconditionError("pruned search supports order <= 16");
  if (order == 1) return {CanonicalForm{1, {0}, {0}}};

  // Tasks: every assignment of the meet table's first row (n-1 free cells).
  std::vector<std::vector<std::uint8_t>> tasks;
  {
    std::vector<std::uint8_t> prefix(order - 1, 0);
    while (true) {
      tasks.push_back(prefix);
      std::size_t i = prefix.size();
      while (i > 0 && ++prefix[i - 1] == order) prefix[--i] = 0;
      if (i == 0) break;
    }
  }
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));

  std::vector<std::set<CanonicalForm>> found(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      PrunedSearch search(order);
      if (search.set_prefix(tasks[t])) search.run_from(search.prefix_cells(), found[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  std::set<CanonicalForm> merged;
  for (auto& f : found) merged.merge(f);
  return {merged.begin(), merged.end()};
}

// ---------------------------------------------------------------------------
// Strategy 2: unpruned scan

std::vector<CanonicalForm> enumerate_by_exhaustive_scan(std::size_t order) {
  if (order == 0 || order > 3) throw PreconditionError("exhaustive scan supports orders 1..3");
  const std::size_t n = order;
  const std::size_t cells = n * n;
  std::size_t tables = 1;
  for (std::size_t i = 0; i < cells; ++i) tables *= n;

  auto decode = [&](std::size_t code) {
    std::vector<ElementId> t(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      t[i] = static_cast<ElementId>(code % n);
      code /= n;
    }
    return t;
  };
  auto is_band = [&](const std::vector<ElementId>& t) {
    for (std::size_t x = 0; x < n; ++x) {
      if (t[x * n + x] != x) return false;
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
    }
    return true;
  };

  std::vector<std::vector<ElementId>> bands;
  for (std::size_t code = 0; code < tables; ++code) {
    auto t = decode(code);
    if (is_band(t)) bands.push_back(std::move(t));
  }
  std::set<CanonicalForm> out;
  for (const auto& meet : bands) {
    for (std::size_t code = 0; code < tables; ++code) {
      FiniteSkewLattice s = FiniteSkewLattice::from_tables(n, meet, decode(code));
      if (validate_skew_axioms(s).verdict) out.insert(canonicalize(validated(std::move(s))));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<FiniteSkewLattice> enumerate(std::size_t order, const CensusFilter& filter, const CensusOptions& options) {
  const std::size_t cap = options.order_cap.value_or(census_order_cap(!filter.is_trivial()));
  if (order == 0) throw PreconditionError("order must be positive");
  if (order > cap) {
    throw PreconditionError("census order " + std::to_string(order) + " exceeds cap " + std::to_string(cap) +
                            " (set SKEWLAT_ORDER_CAP to raise it)");
  }
  std::vector<FiniteSkewLattice> out;
  for (const auto& form : enumerate_by_pruned_search(order, options.workers)) {
    FiniteSkewLattice s = from_canonical(form);
    if (filter.matches(s)) out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Predicate catalog

namespace {

using Predicate = std::function<bool(const FiniteSkewLattice&)>;

bool normal_symmetric(const FiniteSkewLattice& s) {
  return check_identity(s, Identity::kNormal).verdict && check_symmetric(s).verdict;
}

bool theorem_hypotheses(const FiniteSkewLattice& s) {
  return check_identity(s, Identity::kStronglyDistributive).verdict && effective_zero(s).has_value() &&
         check_JC(s).verdict;
}

const std::map<std::string_view, Predicate>& catalog() {
  static const std::map<std::string_view, Predicate> kCatalog = [] {
    std::map<std::string_view, Predicate> c;
    auto identity = [](Identity i) { return [i](const FiniteSkewLattice& s) { return check_identity(s, i).verdict; }; };
    c["validated"] = [](const FiniteSkewLattice& s) { return validate_skew_axioms(s).verdict; };
    c["regular"] = identity(Identity::kRegular);
    c["normal"] = identity(Identity::kNormal);
    c["distributive"] = identity(Identity::kDistributive);
    c["strongly_distributive"] = identity(Identity::kStronglyDistributive);
    c["left_handed"] = identity(Identity::kLeftHanded);
    c["right_handed"] = identity(Identity::kRightHanded);
    c["commutative"] = identity(Identity::kCommutative);
    c["symmetric"] = [](const FiniteSkewLattice& s) { return check_symmetric(s).verdict; };
    c["zero"] = [](const FiniteSkewLattice& s) { return effective_zero(s).has_value(); };
    c["lemma_reg"] = [](const FiniteSkewLattice& s) { return check_lemma_reg(s).verdict; };
    c["down_sets_commutative"] = [](const FiniteSkewLattice& s) {
      for (ElementId a = 0; a < s.order(); ++a) {
        if (!is_commutative(down_set(s, a).lattice)) return false;
      }
      return true;
    };
    c["JC"] = [](const FiniteSkewLattice& s) { return normal_symmetric(s) && check_JC(s).verdict; };
    c["BA"] = [](const FiniteSkewLattice& s) { return normal_symmetric(s) && check_BA(s).verdict; };
    c["EX"] = [](const FiniteSkewLattice& s) { return normal_symmetric(s) && check_EX(s).verdict; };
    c["LS"] = [](const FiniteSkewLattice& s) { return normal_symmetric(s) && check_LS(s).verdict; };
    c["prop_joins"] = [](const FiniteSkewLattice& s) { return !normal_symmetric(s) || check_prop_joins(s).verdict; };
    c["implication_chain"] = [](const FiniteSkewLattice& s) {
      return !normal_symmetric(s) || check_implication_chain(s).verdict;
    };
    c["ncframe"] = [](const FiniteSkewLattice& s) { return is_ncframe(s).verdict; };
    c["shadow_frame"] = [](const FiniteSkewLattice& s) { return is_frame(quotient(s).lattice).is_frame; };
    c["theorem_ncframes"] = [](const FiniteSkewLattice& s) {
      return !theorem_hypotheses(s) || check_theorem_ncframes(s).verdict;
    };
    return c;
  }();
  return kCatalog;
}

// Splits on '&' and on the UTF-8 wedge.
std::vector<std::string_view> conjuncts(std::string_view expression) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  const std::string_view wedge = "∧";
  while (start <= expression.size()) {
    const std::size_t amp = expression.find('&', start);
    const std::size_t w = expression.find(wedge, start);
    const std::size_t cut = std::min(amp, w);
    out.push_back(trim(expression.substr(start, cut == std::string_view::npos ? std::string_view::npos : cut - start)));
    if (cut == std::string_view::npos) break;
    start = cut + (cut == amp ? 1 : wedge.size());
  }
  return out;
}

std::vector<const Predicate*> resolve(std::string_view expression) {
  std::vector<const Predicate*> out;
  for (std::string_view name : conjuncts(expression)) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw PreconditionError("unknown predicate '" + std::string(name) + "'");
    out.push_back(&it->second);
  }
  return out;
}

}  // namespace

std::vector<std::string_view> predicate_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, p] : catalog()) names.push_back(name);
  return names;
}

bool evaluate_predicate(const FiniteSkewLattice& s, std::string_view expression) {
  require_validated(s);
  for (const Predicate* p : resolve(expression)) {
    if (!(*p)(s)) return false;
  }
  return true;
}

std::optional<FiniteSkewLattice> search_counterexample(std::size_t order_max, std::string_view hypothesis,
                                                       std::string_view conclusion) {
  const auto hyp = resolve(hypothesis);
  const auto concl = resolve(conclusion);
  auto holds = [](const std::vector<const Predicate*>& ps, const FiniteSkewLattice& s) {
    return std::all_of(ps.begin(), ps.end(), [&](const Predicate* p) { return (*p)(s); });
  };
  for (std::size_t order = 1; order <= order_max; ++order) {
    for (const auto& s : enumerate(order)) {
      if (holds(hyp, s) && !holds(concl, s)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace skewlat
