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

#ifndef LOGEO_ZLINE_HPP
#define LOGEO_ZLINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logeo::zline {

/// A point of Hom(W(X), Z): one integer per variable.
using ZPoint = std::vector<std::int64_t>;

/// Entries beyond this magnitude are rejected.
inline constexpr std::int64_t default_entry_bound = 1'000'000;

/// E y. (x_1 == c_1 y & ... & x_n == c_n y) over (Z, +).
struct LinearExistsFormula {
  std::vector<std::int64_t> coefficients;
  /// Coordinate whose |a| became the leading coefficient (0 unless rotated).
  std::size_t lead = 0;

  /// In the formula grammar over the group signature, variables x1..xn.
  /// Powers above 64 print as y^k, which the parser does not accept.
  std::string to_string() const;
};

/// c_lead = |a_lead|, c_i = sgn(a_i a_lead) |a_i|, where lead is the first
/// non-zero coordinate. The all-zero tuple yields all-zero coefficients.
LinearExistsFormula build_test_formula(const ZPoint& a);

/// Is there an integer y with b_i = c_i y for every i?
bool eval_exists_linear(const LinearExistsFormula& f, const ZPoint& b);

struct IsotypyVerdict {
  bool isotyped = false;
  std::optional<LinearExistsFormula> witness;
  /// 1 when the witness holds at a and fails at b, 2 for the reverse.
  int holds_at = 0;
};

/// LKer(a) = LKer(b) in Z iff b = a or b = -a.
IsotypyVerdict z_isotyped(const ZPoint& a, const ZPoint& b);

/// u(m_1..m_n) = E x. (x^{m_1} = x_1 & ... & x^{m_n} = x_n), additively.
struct DivisibilityFormula {
  std::vector<std::int64_t> multipliers;
};

bool eval_divisibility(const DivisibilityFormula& f, const ZPoint& a);

/// "2,-4" -> {2, -4}; enforces the entry bound.
ZPoint parse_zpoint(std::string_view text, std::int64_t bound = default_entry_bound);
std::string format_zpoint(const ZPoint& a);

}  // namespace logeo::zline

#endif  // LOGEO_ZLINE_HPP
