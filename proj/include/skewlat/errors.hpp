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

#ifndef SKEWLAT_ERRORS_HPP
#define SKEWLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-square table, out-of-range id, broken representation.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (unvalidated structure, empty
/// subset, unknown name, unmet hypothesis).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input passed its preconditions but an algebraic fact that must hold
/// for it did not. Indicates a non-skew-lattice slipping through or a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewlat

#endif  // SKEWLAT_ERRORS_HPP
