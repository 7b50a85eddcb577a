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

// Text format for finite structures:
//
//   skewlat 1
//   n 2
//   zero 0            # optional
//   meet
//   0 0
//   1 1
//   join
//   0 1
//   0 1
//   labels            # optional
//   "a" "b"
//
// Tokens are whitespace separated and '#' starts a comment. Each table row
// sits on its own line, row index = left operand.

#ifndef SKEWLAT_FORMAT_HPP
#define SKEWLAT_FORMAT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlat/core.hpp"

namespace skewlat {

class ParseError : public StructuralError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : StructuralError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct StructureFile {
  int version = 1;
  std::size_t order = 0;
  std::optional<ElementId> zero;
  std::vector<ElementId> meet;
  std::vector<ElementId> join;
  std::vector<std::string> labels;

  /// Raw, unvalidated structure.
  FiniteSkewLattice to_lattice() const;
};

/// Throws ParseError (with 1-based line and column) on any syntax,
/// dimension, range or duplicate-section problem.
StructureFile parse_structure(std::string_view text);

std::string emit_structure(const FiniteSkewLattice& s);

}  // namespace skewlat

#endif  // SKEWLAT_FORMAT_HPP
