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

#include "logeo/formula.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "logeo/error.hpp"

namespace logeo {

Formula Formula::equality(VarSort sort, Term lhs, Term rhs) {
  for (const Term* t : {&lhs, &rhs}) {
    auto m = t->max_variable();
    if (m && *m >= sort.size()) throw SortError("equality term outside sort {" + sort.to_string() + "}");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::equality;
  node->sort = std::move(sort);
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::negation;
  node->sort = operand.sort();
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

namespace {

void require_same_sort(const Formula& a, const Formula& b) {
  if (!(a.sort() == b.sort())) {
    throw SortError("operands over {" + a.sort().to_string() + "} and {" + b.sort().to_string() + "}");
  }
}

}  // namespace

Formula Formula::conjunction(Formula left, Formula right) {
  require_same_sort(left, right);
  auto node = std::make_shared<Node>();
  node->kind = Kind::conjunction;
  node->sort = left.sort();
  node->children = {std::move(left), std::move(right)};
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula left, Formula right) {
  require_same_sort(left, right);
  auto node = std::make_shared<Node>();
  node->kind = Kind::disjunction;
  node->sort = left.sort();
  node->children = {std::move(left), std::move(right)};
  return Formula(std::move(node));
}

Formula Formula::implication(Formula premise, Formula conclusion) {
  return disjunction(negation(std::move(premise)), std::move(conclusion));
}

Formula Formula::exists(std::size_t var, Formula body) {
  if (var >= body.sort().size()) throw SortError("quantified variable outside sort");
  auto node = std::make_shared<Node>();
  node->kind = Kind::exists;
  node->sort = body.sort();
  node->var = var;
  node->children.push_back(std::move(body));
  return Formula(std::move(node));
}

Formula Formula::forall(std::size_t var, Formula body) {
  if (var >= body.sort().size()) throw SortError("quantified variable outside sort");
  auto node = std::make_shared<Node>();
  node->kind = Kind::forall;
  node->sort = body.sort();
  node->var = var;
  node->children.push_back(std::move(body));
  return Formula(std::move(node));
}

Formula Formula::substitution(Substitution s, Formula inner) {
  if (!(inner.sort() == s.source())) {
    throw SortError("substitution source {" + s.source().to_string() + "} but inner formula over {" +
                    inner.sort().to_string() + "}");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::substitution;
  node->sort = s.target();
  node->children.push_back(std::move(inner));
  node->subst = std::make_shared<const Substitution>(std::move(s));
  return Formula(std::move(node));
}

Formula Formula::conjunction_of(std::vector<Formula> parts) {
  if (parts.empty()) throw Error("empty conjunction");
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction(acc, parts[i]);
  return acc;
}

Formula Formula::disjunction_of(std::vector<Formula> parts) {
  if (parts.empty()) throw Error("empty disjunction");
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disjunction(acc, parts[i]);
  return acc;
}

bool Formula::substitution_free() const {
  if (kind() == Kind::substitution) return false;
  return std::all_of(node_->children.begin(), node_->children.end(),
                     [](const Formula& c) { return c.substitution_free(); });
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

std::size_t Formula::size() const {
  std::size_t s = 1;
  for (const auto& c : node_->children) s += c.size();
  return s;
}

std::vector<bool> Formula::free_variables() const {
  std::vector<bool> out(sort().size(), false);
  switch (kind()) {
    case Kind::equality:
      lhs().collect_variables(out);
      rhs().collect_variables(out);
      out.resize(sort().size());
      break;
    case Kind::negation:
      out = operand().free_variables();
      break;
    case Kind::conjunction:
    case Kind::disjunction: {
      auto a = left().free_variables();
      auto b = right().free_variables();
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] || b[i];
      break;
    }
    case Kind::exists:
    case Kind::forall:
      out = operand().free_variables();
      out[variable()] = false;
      break;
    case Kind::substitution: {
      auto inner = operand().free_variables();
      for (std::size_t y = 0; y < inner.size(); ++y) {
        if (inner[y]) subst().image(y).collect_variables(out);
      }
      out.resize(sort().size());
      break;
    }
  }
  return out;
}

bool Formula::is_closed() const {
  auto fv = free_variables();
  return std::none_of(fv.begin(), fv.end(), [](bool b) { return b; });
}

void check_formula(const Formula& u, const Signature& sig) {
  switch (u.kind()) {
    case Formula::Kind::equality:
      check_term(sig, u.sort(), u.lhs());
      check_term(sig, u.sort(), u.rhs());
      return;
    case Formula::Kind::negation:
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      check_formula(u.operand(), sig);
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      check_formula(u.left(), sig);
      check_formula(u.right(), sig);
      return;
    case Formula::Kind::substitution:
      for (const auto& t : u.subst().images()) check_term(sig, u.sort(), t);
      check_formula(u.operand(), sig);
      return;
  }
}

namespace {

enum Level { kQuant = 0, kImplies = 1, kOr = 2, kAnd = 3, kUnary = 4 };

void print_into(std::ostringstream& out, const Formula& u, const Signature& sig, int context) {
  auto wrap = [&](int level, auto&& body) {
    const bool paren = level < context;
    if (paren) out << '(';
    body();
    if (paren) out << ')';
  };
  switch (u.kind()) {
    case Formula::Kind::equality:
      out << print_term(u.lhs(), sig, u.sort()) << " == " << print_term(u.rhs(), sig, u.sort());
      return;
    case Formula::Kind::negation:
      out << "!(";
      print_into(out, u.operand(), sig, kQuant);
      out << ')';
      return;
    case Formula::Kind::conjunction:
      wrap(kAnd, [&] {
        print_into(out, u.left(), sig, kAnd);
        out << " & ";
        print_into(out, u.right(), sig, kAnd + 1);
      });
      return;
    case Formula::Kind::disjunction:
      wrap(kOr, [&] {
        print_into(out, u.left(), sig, kOr);
        out << " | ";
        print_into(out, u.right(), sig, kOr + 1);
      });
      return;
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      wrap(kQuant, [&] {
        out << (u.kind() == Formula::Kind::exists ? "E " : "A ") << u.sort().name(u.variable()) << ". ";
        print_into(out, u.operand(), sig, kQuant);
      });
      return;
    case Formula::Kind::substitution: {
      const auto& s = u.subst();
      out << "subst[";
      for (std::size_t y = 0; y < s.source().size(); ++y) {
        if (y) out << ", ";
        out << s.source().name(y) << " := " << print_term(s.image(y), sig, s.target());
      }
      out << "](";
      print_into(out, u.operand(), sig, kQuant);
      out << ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& u, const Signature& sig) {
  std::ostringstream out;
  print_into(out, u, sig, kQuant);
  return out.str();
}

PointSet value(const Formula& u, const Space& space) {
  if (!(u.sort() == space.sort())) {
    throw SortError("formula over {" + u.sort().to_string() + "} evaluated over {" + space.sort().to_string() + "}");
  }
  switch (u.kind()) {
    case Formula::Kind::equality:
      return equality_value(space, u.lhs(), u.rhs());
    case Formula::Kind::negation:
      return ~value(u.operand(), space);
    case Formula::Kind::conjunction:
      return value(u.left(), space) & value(u.right(), space);
    case Formula::Kind::disjunction:
      return value(u.left(), space) | value(u.right(), space);
    case Formula::Kind::exists:
      return exists_x(value(u.operand(), space), u.variable());
    case Formula::Kind::forall:
      return forall_x(value(u.operand(), space), u.variable());
    case Formula::Kind::substitution: {
      Space inner(space.algebra(), u.subst().source());
      return sstar_pointset(u.subst(), value(u.operand(), inner));
    }
  }
  throw Error("unreachable formula kind");
}

PointSet value(const Formula& u, const AlgebraPtr& h) { return value(u, Space(h, u.sort())); }

bool satisfies(const Formula& u, const FiniteAlgebra& h, std::span<const Element> point) {
  switch (u.kind()) {
    case Formula::Kind::equality:
      return eval_point(h, u.lhs(), point) == eval_point(h, u.rhs(), point);
    case Formula::Kind::negation:
      return !satisfies(u.operand(), h, point);
    case Formula::Kind::conjunction:
      return satisfies(u.left(), h, point) && satisfies(u.right(), h, point);
    case Formula::Kind::disjunction:
      return satisfies(u.left(), h, point) || satisfies(u.right(), h, point);
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      const bool want = u.kind() == Formula::Kind::exists;
      std::vector<Element> moved(point.begin(), point.end());
      for (Element a = 0; a < h.size(); ++a) {
        moved[u.variable()] = a;
        if (satisfies(u.operand(), h, moved) == want) return want;
      }
      return !want;
    }
    case Formula::Kind::substitution: {
      const auto& s = u.subst();
      std::vector<Element> pulled(s.source().size());
      for (std::size_t y = 0; y < pulled.size(); ++y) pulled[y] = eval_point(h, s.image(y), point);
      return satisfies(u.operand(), h, pulled);
    }
  }
  throw Error("unreachable formula kind");
}

bool lker_contains(std::span<const Element> point, const Formula& u, const AlgebraPtr& h) {
  Space space(h, u.sort());
  return value(u, space).contains(space.index(point));
}

bool in_theory(const Formula& u, const AlgebraPtr& h) {
  if (!u.is_closed()) throw SortError("formula is not closed");
  return value(u, h).is_full();
}

std::vector<Term> enumerate_terms(const Signature& sig, const VarSort& sort, std::size_t depth_bound,
                                  std::size_t budget) {
  std::vector<Term> terms;
  if (depth_bound == 0) return terms;
  auto push = [&](Term t) {
    if (terms.size() >= budget) {
      throw GuardError("term window exceeds budget of " + std::to_string(budget) + " terms");
    }
    terms.push_back(std::move(t));
  };
  for (std::size_t i = 0; i < sort.size(); ++i) push(Term::variable(i));
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    if (sig.op(op).arity == 0) push(Term::apply(op));
  }
  std::size_t lo = 0, hi = terms.size();
  for (std::size_t d = 2; d <= depth_bound; ++d) {
    for (std::size_t op = 0; op < sig.op_count(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      if (arity == 0) continue;
      std::vector<std::size_t> idx(arity, 0);
      bool done = false;
      while (!done) {
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= lo; })) {
          std::vector<Term> children;
          for (auto i : idx) children.push_back(terms[i]);
          push(Term::apply(op, std::move(children)));
        }
        std::size_t k = arity;
        done = true;
        while (k-- > 0) {
          if (++idx[k] < hi) {
            done = false;
            break;
          }
          idx[k] = 0;
        }
      }
    }
    lo = hi;
    hi = terms.size();
  }
  return terms;
}

KernelWindow::KernelWindow(const FiniteAlgebra& h, const VarSort& sort, std::span<const Element> point,
                           std::size_t depth_bound, std::size_t term_budget)
    : depth_(depth_bound) {
  if (depth_bound == 0) throw Error("depth bound must be at least 1");
  if (point.size() != sort.size()) throw SortError("point does not match the sort");
  terms_ = enumerate_terms(h.signature(), sort, depth_bound, term_budget);
  values_.reserve(terms_.size());
  for (const auto& t : terms_) values_.push_back(eval_point(h, t, point));
}

std::vector<std::pair<std::size_t, std::size_t>> KernelWindow::equalities() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = i + 1; j < terms_.size(); ++j) {
      if (values_[i] == values_[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t KernelWindow::equality_count() const {
  std::map<Element, std::size_t> counts;
  for (auto v : values_) ++counts[v];
  std::size_t total = 0;
  for (auto [v, c] : counts) total += c * (c - 1) / 2;
  return total;
}

bool KernelWindow::same_as(const KernelWindow& other) const {
  if (depth_ != other.depth_ || terms_.size() != other.terms_.size()) return false;
  std::map<Element, std::size_t> first_a, first_b;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    auto fa = first_a.emplace(values_[i], i).first->second;
    auto fb = first_b.emplace(other.values_[i], i).first->second;
    if (fa != fb) return false;
  }
  return true;
}

KernelWindow kernel_of_point_restricted(const FiniteAlgebra& h, const VarSort& sort, std::span<const Element> point,
                                        std::size_t depth_bound) {
  return KernelWindow(h, sort, point, depth_bound);
}

}  // namespace logeo
