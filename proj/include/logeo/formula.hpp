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

#ifndef LOGEO_FORMULA_HPP
#define LOGEO_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logeo/algebra.hpp"
#include "logeo/signature.hpp"
#include "logeo/space.hpp"

namespace logeo {

/// A formula of Phi(X) as a raw syntax tree. Every node knows its sort; a
/// substitution node's inner formula lives over the substitution's source.
class Formula {
 public:
  enum class Kind { equality, negation, conjunction, disjunction, exists, forall, substitution };

  static Formula equality(VarSort sort, Term lhs, Term rhs);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  /// a -> b as !a | b.
  static Formula implication(Formula premise, Formula conclusion);
  static Formula exists(std::size_t var, Formula body);
  static Formula forall(std::size_t var, Formula body);
  static Formula substitution(Substitution s, Formula inner);

  /// Folds a non-empty list; a single element is returned as is.
  static Formula conjunction_of(std::vector<Formula> parts);
  static Formula disjunction_of(std::vector<Formula> parts);

  Kind kind() const { return node_->kind; }
  const VarSort& sort() const { return node_->sort; }
  const Term& lhs() const { return node_->lhs; }
  const Term& rhs() const { return node_->rhs; }
  /// Negation, quantifier body, and substitution inner formula.
  const Formula& operand() const { return node_->children.at(0); }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }
  std::size_t variable() const { return node_->var; }
  const Substitution& subst() const { return *node_->subst; }

  /// True when no substitution node occurs (the Phi^0 fragment).
  bool substitution_free() const;
  std::size_t depth() const;
  std::size_t size() const;
  /// Per sort variable: does it occur free?
  std::vector<bool> free_variables() const;
  bool is_closed() const;

 private:
  struct Node {
    Kind kind;
    VarSort sort;
    Term lhs = Term::variable(0);
    Term rhs = Term::variable(0);
    std::vector<Formula> children;
    std::size_t var = 0;
    std::shared_ptr<const Substitution> subst;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar: quantifiers "E v." / "A v." scope to the end or the closing
/// paren; then "->" (right assoc), "|", "&", unary "!"; atoms "t == t" and
/// "t != t"; "subst[v := t, ...](formula)" where the listed variables form
/// the inner sort and the terms live over the outer sort.
Formula parse_formula(std::string_view text, const Signature& sig, const VarSort& sort);
std::string print_formula(const Formula& u, const Signature& sig);

/// Checks symbols against the signature and sorts against each node.
void check_formula(const Formula& u, const Signature& sig);

/// Val^X_H(u): structural recursion onto Bool(W(X), H).
PointSet value(const Formula& u, const AlgebraPtr& h);
PointSet value(const Formula& u, const Space& space);

/// Pointwise evaluator: quantifiers loop over the carrier, substitution
/// nodes evaluate mu o s. Shares no code with value().
bool satisfies(const Formula& u, const FiniteAlgebra& h, std::span<const Element> point);

/// u in LKer(mu).
bool lker_contains(std::span<const Element> point, const Formula& u, const AlgebraPtr& h);

/// u in Th^X(H). Throws SortError when u has free variables.
bool in_theory(const Formula& u, const AlgebraPtr& h);

/// All equalities between terms of depth <= bound (leaves have depth 1) that
/// a point satisfies. Stored as the enumerated terms and their values.
class KernelWindow {
 public:
  KernelWindow(const FiniteAlgebra& h, const VarSort& sort, std::span<const Element> point,
               std::size_t depth_bound, std::size_t term_budget = 20000);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t depth_bound() const { return depth_; }
  bool contains(std::size_t i, std::size_t j) const { return values_[i] == values_[j]; }
  /// Pairs (i, j), i < j, of term indices whose equality the point satisfies.
  std::vector<std::pair<std::size_t, std::size_t>> equalities() const;
  std::size_t equality_count() const;
  /// Same term list and the same satisfied equalities.
  bool same_as(const KernelWindow& other) const;

 private:
  std::size_t depth_;
  std::vector<Term> terms_;
  std::vector<Element> values_;
};

/// Enumerates all terms over `sort` of depth <= bound in a fixed order.
std::vector<Term> enumerate_terms(const Signature& sig, const VarSort& sort,
                                  std::size_t depth_bound, std::size_t budget);

KernelWindow kernel_of_point_restricted(const FiniteAlgebra& h, const VarSort& sort,
                                        std::span<const Element> point, std::size_t depth_bound);

}  // namespace logeo

#endif  // LOGEO_FORMULA_HPP
