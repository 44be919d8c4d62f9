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

#ifndef LOGEO_ERROR_HPP
#define LOGEO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax errors carry the byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Two objects that must live over the same variable sort (or algebra) do not.
class SortError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard (points, carrier, escalation) would be exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Malformed algebra documents, out-of-range table entries, failed identities.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

}  // namespace logeo

#endif  // LOGEO_ERROR_HPP
