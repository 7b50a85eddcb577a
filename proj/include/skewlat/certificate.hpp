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

#ifndef SKEWLAT_CERTIFICATE_HPP
#define SKEWLAT_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace skewlat {

/// A law instance that fails. `tuple` binds the law's variables in order;
/// `subset` is used by the infinitary laws (distributivity over a commuting
/// subset) and is empty otherwise.
struct Violation {
  std::string law;
  std::vector<std::uint32_t> tuple;
  std::vector<std::uint32_t> subset;
};

/// A single distinguished element: a supremum, infimum or zero.
struct ElementWitness {
  std::uint32_t element;
};

struct SectionWitness {
  std::vector<std::uint32_t> members;
};

/// A set of element ids singled out by a check, with a short reason.
struct SubsetWitness {
  std::vector<std::uint32_t> members;
  std::string reason;
};

struct CaseCheck {
  std::string claim;
  bool holds;
};

/// Finite case analysis for the symbolic models. Each entry is one atomic
/// fact that was evaluated.
struct CaseAnalysis {
  std::vector<CaseCheck> checks;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.holds ? 0 : 1;
    return n;
  }
};

using Witness =
    std::variant<std::monostate, Violation, ElementWitness, SectionWitness, SubsetWitness, CaseAnalysis>;

struct Certificate {
  bool verdict = false;
  Witness witness;
  std::string note;

  static Certificate pass(Witness w = {}, std::string note = {}) {
    return Certificate{true, std::move(w), std::move(note)};
  }
  static Certificate fail(Witness w, std::string note = {}) {
    return Certificate{false, std::move(w), std::move(note)};
  }

  explicit operator bool() const noexcept { return verdict; }

  const Violation* violation() const noexcept { return std::get_if<Violation>(&witness); }
};

}  // namespace skewlat

#endif  // SKEWLAT_CERTIFICATE_HPP
