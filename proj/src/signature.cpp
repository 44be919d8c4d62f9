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

#include "logeo/signature.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "logeo/error.hpp"

namespace logeo {

std::string Variety::to_string() const {
  switch (kind) {
    case Kind::generic:
      return "generic";
    case Kind::group:
      return "group";
    case Kind::abelian_group:
      return "abelian_group";
    case Kind::abelian_exponent_p:
      return "abelian_exponent_p(" + std::to_string(p) + ")";
  }
  return "generic";
}

Signature::Signature(std::string name, std::vector<OpSymbol> ops, std::optional<std::string> infix,
                     Variety variety)
    : name_(std::move(name)), ops_(std::move(ops)), variety_(variety) {
  if (ops_.empty()) throw AlgebraError("signature '" + name_ + "' has no operation symbols");
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (op.sym.empty()) throw AlgebraError("empty operation symbol");
    if (!seen.insert(op.sym).second) throw AlgebraError("duplicate operation symbol '" + op.sym + "'");
  }
  if (infix) {
    auto idx = find(*infix);
    if (!idx) throw AlgebraError("infix symbol '" + *infix + "' is not an operation");
    if (ops_[*idx].arity != 2) throw AlgebraError("infix symbol '" + *infix + "' is not binary");
    infix_ = idx;
  }
  if (variety_.is_group()) {
    std::optional<std::size_t> mul, inv, unit;
    bool shape_ok = true;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      std::optional<std::size_t>* slot = nullptr;
      if (ops_[i].arity == 2) slot = &mul;
      if (ops_[i].arity == 1) slot = &inv;
      if (ops_[i].arity == 0) slot = &unit;
      if (!slot || slot->has_value()) {
        shape_ok = false;
        break;
      }
      *slot = i;
    }
    if (!shape_ok || !mul || !inv || !unit) {
      throw AlgebraError("group signature needs exactly one binary, one unary and one nullary symbol");
    }
    group_ops_ = GroupOps{*mul, *inv, *unit};
  }
  if (variety_.kind == Variety::Kind::abelian_exponent_p && variety_.p < 2) {
    throw AlgebraError("exponent must be a prime");
  }
}

Signature Signature::group(Variety variety) {
  return Signature("group", {{"*", 2}, {"inv", 1}, {"e", 0}}, std::string("*"), variety);
}

std::optional<std::size_t> Signature::find(std::string_view sym) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].sym == sym) return i;
  }
  return std::nullopt;
}

bool Signature::same_language(const Signature& other) const {
  return ops_ == other.ops_ && infix_ == other.infix_;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

}  // namespace

VarSort::VarSort(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw SortError("'" + n + "' is not a variable name");
    if (!seen.insert(n).second) throw SortError("variable '" + n + "' declared twice");
  }
}

VarSort VarSort::parse(std::string_view text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  names.push_back(current);
  if (names.size() == 1 && names[0].empty()) throw SortError("empty sort");
  return VarSort(std::move(names));
}

std::optional<std::size_t> VarSort::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VarSort VarSort::extended(const std::vector<std::string>& more) const {
  auto all = names_;
  all.insert(all.end(), more.begin(), more.end());
  return VarSort(std::move(all));
}

std::string VarSort::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  return out;
}

Term Term::variable(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->var = index;
  return Term(std::move(node));
}

Term Term::apply(std::size_t op, std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->children = std::move(children);
  return Term(std::move(node));
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

std::size_t Term::size() const {
  std::size_t s = 1;
  for (const auto& c : node_->children) s += c.size();
  return s;
}

std::optional<std::size_t> Term::max_variable() const {
  if (is_variable()) return node_->var;
  std::optional<std::size_t> best;
  for (const auto& c : node_->children) {
    auto m = c.max_variable();
    if (m && (!best || *m > *best)) best = m;
  }
  return best;
}

void Term::collect_variables(std::vector<bool>& seen) const {
  if (is_variable()) {
    if (node_->var >= seen.size()) seen.resize(node_->var + 1, false);
    seen[node_->var] = true;
    return;
  }
  for (const auto& c : node_->children) c.collect_variables(seen);
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->var != other.node_->var || node_->op != other.node_->op) return false;
  return node_->children == other.node_->children;
}

void check_term(const Signature& sig, const VarSort& sort, const Term& term) {
  if (term.is_variable()) {
    if (term.var_index() >= sort.size()) {
      throw SortError("variable #" + std::to_string(term.var_index()) + " outside sort {" +
                      sort.to_string() + "}");
    }
    return;
  }
  if (term.op() >= sig.op_count()) throw AlgebraError("unknown operation index");
  if (term.children().size() != sig.op(term.op()).arity) {
    throw AlgebraError("arity mismatch for '" + sig.op(term.op()).sym + "'");
  }
  for (const auto& c : term.children()) check_term(sig, sort, c);
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig, const VarSort& sort, std::size_t pos = 0)
      : text_(text), sig_(sig), sort_(sort), pos_(pos) {}

  std::size_t position() const { return pos_; }

  Term parse_all() {
    Term t = parse_term();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return t;
  }

  Term parse_term() {
    Term left = parse_atom();
    while (auto op = match_infix()) left = Term::apply(*op, {left, parse_atom()});
    return left;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<std::size_t> match_infix() {
    auto infix = sig_.infix();
    if (!infix) return std::nullopt;
    skip_space();
    const std::string& sym = sig_.op(*infix).sym;
    if (text_.substr(pos_, sym.size()) != sym) return std::nullopt;
    if (is_identifier(sym)) {
      std::size_t end = pos_ + sym.size();
      if (end < text_.size() && is_ident_char(text_[end])) return std::nullopt;
    }
    pos_ += sym.size();
    return infix;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) {
      throw ParseError(pos_ >= text_.size() ? "unexpected end of term" : "expected identifier", pos_);
    }
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term parse_atom() {
    skip_space();
    if (consume('(')) {
      Term inner = parse_term();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    std::size_t start = pos_;
    std::string name = identifier();
    auto op = sig_.find(name);
    auto var = sort_.index_of(name);
    if (op && var) throw ParseError("'" + name + "' is both a variable and an operation", start);
    if (var) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(') throw ParseError("variable '" + name + "' applied", pos_);
      return Term::variable(*var);
    }
    if (!op) {
      // A name that could be a variable of another sort.
      throw SortError("variable not in sort: '" + name + "' at position " + std::to_string(start));
    }
    const std::size_t arity = sig_.op(*op).arity;
    std::vector<Term> children;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      skip_space();
      if (!consume(')')) {
        children.push_back(parse_term());
        while (consume(',')) children.push_back(parse_term());
        if (!consume(')')) throw ParseError("expected ')' or ','", pos_);
      }
    }
    if (children.size() != arity) {
      throw ParseError("arity mismatch: '" + name + "' takes " + std::to_string(arity) + " arguments, got " +
                           std::to_string(children.size()),
                       start);
    }
    return Term::apply(*op, std::move(children));
  }

  std::string_view text_;
  const Signature& sig_;
  const VarSort& sort_;
  std::size_t pos_ = 0;
};

void print_into(std::ostringstream& out, const Term& t, const Signature& sig, const VarSort& sort) {
  if (t.is_variable()) {
    out << sort.name(t.var_index());
    return;
  }
  const auto& op = sig.op(t.op());
  if (sig.infix() && *sig.infix() == t.op()) {
    print_into(out, t.children()[0], sig, sort);
    out << op.sym;
    const Term& right = t.children()[1];
    const bool paren = !right.is_variable() && right.op() == t.op();
    if (paren) out << '(';
    print_into(out, right, sig, sort);
    if (paren) out << ')';
    return;
  }
  out << op.sym;
  if (op.arity == 0) return;
  out << '(';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out << ',';
    print_into(out, t.children()[i], sig, sort);
  }
  out << ')';
}

}  // namespace

Term parse_term(std::string_view text, const Signature& sig, const VarSort& sort) {
  return TermParser(text, sig, sort).parse_all();
}

Term parse_term_prefix(std::string_view text, std::size_t& pos, const Signature& sig, const VarSort& sort) {
  TermParser parser(text, sig, sort, pos);
  Term t = parser.parse_term();
  pos = parser.position();
  return t;
}

std::string print_term(const Term& term, const Signature& sig, const VarSort& sort) {
  std::ostringstream out;
  print_into(out, term, sig, sort);
  return out.str();
}

Term power_term(const Signature& sig, const Term& base, unsigned exponent) {
  auto g = sig.group_ops();
  if (!g) throw AlgebraError("power terms need a group signature");
  if (exponent == 0) return Term::apply(g->unit);
  Term t = base;
  for (unsigned i = 1; i < exponent; ++i) t = Term::apply(g->mul, {t, base});
  return t;
}

Substitution::Substitution(VarSort source, VarSort target, std::vector<Term> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw SortError("substitution must map every variable of {" + source_.to_string() + "}");
  }
  for (const auto& t : images_) {
    auto m = t.max_variable();
    if (m && *m >= target_.size()) throw SortError("substitution image outside {" + target_.to_string() + "}");
  }
}

Substitution Substitution::identity(const VarSort& sort) {
  std::vector<Term> images;
  for (std::size_t i = 0; i < sort.size(); ++i) images.push_back(Term::variable(i));
  return Substitution(sort, sort, std::move(images));
}

Term Substitution::apply(const Term& term) const {
  if (term.is_variable()) return images_.at(term.var_index());
  std::vector<Term> children;
  children.reserve(term.children().size());
  for (const auto& c : term.children()) children.push_back(apply(c));
  return Term::apply(term.op(), std::move(children));
}

Term apply_substitution_term(const Substitution& s, const VarSort& sort, const Term& term) {
  if (!(sort == s.source())) {
    throw SortError("term over {" + sort.to_string() + "} but substitution source is {" +
                    s.source().to_string() + "}");
  }
  return s.apply(term);
}

Substitution compose(const Substitution& first, const Substitution& second) {
  if (!(first.target() == second.source())) throw SortError("substitutions do not compose");
  std::vector<Term> images;
  for (const auto& t : first.images()) images.push_back(second.apply(t));
  return Substitution(first.source(), second.target(), std::move(images));
}

Substitution single_substitution(const VarSort& sort, std::string_view var, Term w) {
  auto x = sort.index_of(var);
  if (!x) throw SortError("variable '" + std::string(var) + "' not in {" + sort.to_string() + "}");
  std::vector<Term> images;
  for (std::size_t i = 0; i < sort.size(); ++i) images.push_back(i == *x ? w : Term::variable(i));
  return Substitution(sort, sort, std::move(images));
}

}  // namespace logeo
