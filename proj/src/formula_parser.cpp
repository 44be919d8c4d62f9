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

#include <cctype>
#include <optional>
#include <string>

#include "logeo/error.hpp"
#include "logeo/formula.hpp"

namespace logeo {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula parse_all(const VarSort& sort) {
    Formula u = parse_formula(sort);
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return u;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(std::string_view tok) {
    skip_space();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool consume(std::string_view tok) {
    if (!at(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!consume(tok)) {
      throw ParseError(pos_ >= text_.size() ? "unexpected end of formula, expected '" + std::string(tok) + "'"
                                            : "expected '" + std::string(tok) + "'",
                       pos_);
    }
  }

  std::optional<std::string> peek_identifier(std::size_t& end) {
    skip_space();
    std::size_t p = pos_;
    if (p >= text_.size() || !ident_start(text_[p])) return std::nullopt;
    while (p < text_.size() && ident_char(text_[p])) ++p;
    end = p;
    return std::string(text_.substr(pos_, p - pos_));
  }

  std::string identifier() {
    std::size_t end = 0;
    auto id = peek_identifier(end);
    if (!id) throw ParseError("expected identifier", pos_);
    pos_ = end;
    return *id;
  }

  // "E v." or "A v." ahead?
  std::optional<bool> quantifier_ahead() {
    std::size_t end = 0;
    auto id = peek_identifier(end);
    if (!id || (*id != "E" && *id != "A")) return std::nullopt;
    std::size_t p = end;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || !ident_start(text_[p])) return std::nullopt;
    while (p < text_.size() && ident_char(text_[p])) ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != '.') return std::nullopt;
    return *id == "E";
  }

  Formula parse_formula(const VarSort& sort) {
    if (quantifier_ahead()) return parse_quantifier(sort);
    Formula left = parse_disjunction(sort);
    if (consume("->")) return Formula::implication(left, parse_formula(sort));
    return left;
  }

  Formula parse_quantifier(const VarSort& sort) {
    const bool is_exists = identifier() == "E";
    skip_space();
    const std::size_t var_pos = pos_;
    const std::string name = identifier();
    expect(".");
    auto var = sort.index_of(name);
    if (!var) throw SortError("quantified variable '" + name + "' at position " + std::to_string(var_pos) +
                              " not in sort {" + sort.to_string() + "}");
    Formula body = parse_formula(sort);
    return is_exists ? Formula::exists(*var, body) : Formula::forall(*var, body);
  }

  Formula parse_disjunction(const VarSort& sort) {
    Formula left = parse_conjunction(sort);
    while (consume("|")) left = Formula::disjunction(left, parse_conjunction(sort));
    return left;
  }

  Formula parse_conjunction(const VarSort& sort) {
    Formula left = parse_unary(sort);
    while (consume("&")) left = Formula::conjunction(left, parse_unary(sort));
    return left;
  }

  Formula parse_unary(const VarSort& sort) {
    skip_space();
    if (at("!") && !at("!=")) {
      ++pos_;
      return Formula::negation(parse_unary(sort));
    }
    return parse_primary(sort);
  }

  Formula parse_primary(const VarSort& sort) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of formula", pos_);
    if (quantifier_ahead()) return parse_quantifier(sort);
    std::size_t end = 0;
    if (auto id = peek_identifier(end); id && *id == "subst" && !sort.contains("subst")) {
      std::size_t p = end;
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
      if (p < text_.size() && text_[p] == '[') {
        pos_ = p + 1;
        return parse_substitution(sort);
      }
    }
    if (text_[pos_] == '(') {
      const std::size_t start = pos_;
      try {
        ++pos_;
        Formula inner = parse_formula(sort);
        expect(")");
        skip_space();
        if (!at("==") && !at("!=")) return inner;
        throw ParseError("parenthesised formula used as a term", pos_);
      } catch (const Error& formula_error) {
        const std::size_t formula_end = pos_;
        pos_ = start;
        try {
          return parse_atom(sort);
        } catch (const Error&) {
          if (pos_ >= formula_end) throw;
          pos_ = formula_end;
          throw;
        }
      }
    }
    return parse_atom(sort);
  }

  Formula parse_atom(const VarSort& sort) {
    Term lhs = parse_term_prefix(text_, pos_, sig_, sort);
    bool negated = false;
    if (consume("!=")) {
      negated = true;
    } else if (!consume("==")) {
      throw ParseError(pos_ >= text_.size() ? "unexpected end of formula, expected '=='" : "expected '==' or '!='",
                       pos_);
    }
    Term rhs = parse_term_prefix(text_, pos_, sig_, sort);
    Formula eq = Formula::equality(sort, lhs, rhs);
    return negated ? Formula::negation(eq) : eq;
  }

  Formula parse_substitution(const VarSort& outer) {
    std::vector<std::string> names;
    std::vector<Term> images;
    if (!at("]")) {
      do {
        names.push_back(identifier());
        expect(":=");
        images.push_back(parse_term_prefix(text_, pos_, sig_, outer));
      } while (consume(","));
    }
    expect("]");
    expect("(");
    VarSort inner_sort(names);
    Formula inner = parse_formula(inner_sort);
    expect(")");
    return Formula::substitution(Substitution(inner_sort, outer, std::move(images)), inner);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig, const VarSort& sort) {
  return FormulaParser(text, sig).parse_all(sort);
}

}  // namespace logeo
