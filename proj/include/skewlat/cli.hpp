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

#ifndef SKEWLAT_CLI_HPP
#define SKEWLAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "skewlat/certificate.hpp"
#include "skewlat/core.hpp"

namespace skewlat::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns 0 for a true verdict or a successful
/// emission, 1 for a false verdict (certificate printed), 2 for usage,
/// parse or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One-line rendering of a certificate's witness, using element labels.
std::string describe(const Certificate& c, const FiniteSkewLattice& s);

}  // namespace skewlat::cli

#endif  // SKEWLAT_CLI_HPP
