/*
 * Copyright 2026 The logeo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOGEO_GUARDS_HPP
#define LOGEO_GUARDS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace logeo {

/// Desk-scale limits. Every operation that allocates a point space or runs an
/// automorphism search consults these.
struct Guards {
  std::uint64_t max_points = std::uint64_t{1} << 24;
  std::size_t max_carrier = 64;
  std::uint64_t max_automorphisms = std::uint64_t{1} << 20;

  /// Parses "points=N,carrier=N,automorphisms=N" (any subset, any order).
  static Guards parse(std::string_view text);
  static Guards parse(std::string_view text, Guards base);

  /// The process-wide defaults. Initialised from LOGEO_GUARDS on first use.
  static const Guards& defaults();
  static void set_defaults(const Guards& guards);
};

}  // namespace logeo

#endif  // LOGEO_GUARDS_HPP
