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

#ifndef SKEWLAT_SRC_ENV_HPP
#define SKEWLAT_SRC_ENV_HPP

#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "skewlat/errors.hpp"

namespace skewlat::detail {

/// SKEWLAT_ORDER_CAP, if set.
inline std::optional<std::size_t> order_cap_override() {
  const char* env = std::getenv("SKEWLAT_ORDER_CAP");
  if (env == nullptr || *env == '\0') return std::nullopt;
  const std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw PreconditionError("SKEWLAT_ORDER_CAP must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace skewlat::detail

#endif  // SKEWLAT_SRC_ENV_HPP
