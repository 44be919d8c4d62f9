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

#include "logeo/guards.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include "logeo/error.hpp"

namespace logeo {

namespace {

std::mutex guards_mutex;
Guards* installed = nullptr;

std::uint64_t parse_count(std::string_view text, std::string_view key) {
  if (text.empty()) throw Error("missing value for guard '" + std::string(key) + "'");
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error("guard '" + std::string(key) + "' is not a positive integer");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (value == 0) throw Error("guard '" + std::string(key) + "' must be positive");
  return value;
}

}  // namespace

Guards Guards::parse(std::string_view text) { return parse(text, Guards{}); }

Guards Guards::parse(std::string_view text, Guards base) {
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error("guard entry '" + std::string(item) + "' lacks '='");
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1), key);
    if (key == "points") {
      base.max_points = value;
    } else if (key == "carrier") {
      base.max_carrier = value;
    } else if (key == "automorphisms") {
      base.max_automorphisms = value;
    } else {
      throw Error("unknown guard '" + std::string(key) + "'");
    }
  }
  return base;
}

const Guards& Guards::defaults() {
  std::lock_guard lock(guards_mutex);
  if (!installed) {
    Guards g;
    if (const char* env = std::getenv("LOGEO_GUARDS")) g = parse(env, g);
    installed = new Guards(g);
  }
  return *installed;
}

void Guards::set_defaults(const Guards& guards) {
  std::lock_guard lock(guards_mutex);
  if (!installed) {
    installed = new Guards(guards);
  } else {
    *installed = guards;
  }
}

}  // namespace logeo
