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

#include "logeo/zline.hpp"

#include <charconv>
#include <sstream>

#include "logeo/error.hpp"

namespace logeo::zline {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw GuardError("64-bit overflow in integer arithmetic");
  return out;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

int sign(std::int64_t a) { return (a > 0) - (a < 0); }

std::string multiple_of_y(std::int64_t c) {
  if (c == 0) return "e";
  const std::uint64_t k = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
  std::string body;
  if (k > 64) {
    body = "y^" + std::to_string(k);
  } else {
    for (std::uint64_t i = 0; i < k; ++i) body += i ? "*y" : "y";
  }
  return c < 0 ? "inv(" + body + ")" : body;
}

}  // namespace

std::string LinearExistsFormula::to_string() const {
  std::ostringstream out;
  out << "E y. ";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out << " & ";
    out << "x" << (i + 1) << " == " << multiple_of_y(coefficients[i]);
  }
  return out.str();
}

LinearExistsFormula build_test_formula(const ZPoint& a) {
  if (a.empty()) throw SortError("integer tuples need at least one coordinate");
  LinearExistsFormula f{std::vector<std::int64_t>(a.size(), 0), 0};
  std::size_t lead = 0;
  while (lead < a.size() && a[lead] == 0) ++lead;
  if (lead == a.size()) return f;
  f.lead = lead;
  const int s = sign(a[lead]);
  for (std::size_t i = 0; i < a.size(); ++i) f.coefficients[i] = s * sign(a[i]) * checked_abs(a[i]);
  return f;
}

bool eval_exists_linear(const LinearExistsFormula& f, const ZPoint& b) {
  if (f.coefficients.size() != b.size()) throw SortError("tuple length does not match the formula");
  std::size_t lead = 0;
  while (lead < b.size() && f.coefficients[lead] == 0) ++lead;
  if (lead == b.size()) {
    for (auto v : b) {
      if (v != 0) return false;
    }
    return true;
  }
  const std::int64_t c = f.coefficients[lead];
  if (b[lead] % c != 0) return false;
  const std::int64_t y = b[lead] / c;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (checked_mul(f.coefficients[i], y) != b[i]) return false;
  }
  return true;
}

IsotypyVerdict z_isotyped(const ZPoint& a, const ZPoint& b) {
  if (a.size() != b.size()) throw SortError("tuples of different lengths");
  if (a.empty()) throw SortError("integer tuples need at least one coordinate");
  bool same = true, opposite = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i] == b[i];
    opposite = opposite && checked_neg(a[i]) == b[i];
  }
  if (same || opposite) return {true, std::nullopt, 0};
  LinearExistsFormula fa = build_test_formula(a);
  if (!eval_exists_linear(fa, b)) return {false, fa, 1};
  LinearExistsFormula fb = build_test_formula(b);
  if (eval_exists_linear(fb, a)) throw Error("internal: neither test formula separates the tuples");
  return {false, fb, 2};
}

bool eval_divisibility(const DivisibilityFormula& f, const ZPoint& a) {
  if (f.multipliers.size() != a.size()) throw SortError("tuple length does not match the formula");
  if (a.empty()) throw SortError("integer tuples need at least one coordinate");
  for (auto m : f.multipliers) {
    if (m < 1) throw Error("multipliers must be positive");
  }
  if (a[0] % f.multipliers[0] != 0) return false;
  const std::int64_t x = a[0] / f.multipliers[0];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (checked_mul(f.multipliers[i], x) != a[i]) return false;
  }
  return true;
}

ZPoint parse_zpoint(std::string_view text, std::int64_t bound) {
  ZPoint out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec == std::errc::result_out_of_range) throw GuardError("integer out of 64-bit range");
    if (ec != std::errc()) throw ParseError("expected an integer", pos);
    if (v > bound || v < -bound) {
      throw GuardError("entry " + std::to_string(v) + " exceeds the bound " + std::to_string(bound));
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(end - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) return out;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
}

std::string format_zpoint(const ZPoint& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

}  // namespace logeo::zline
