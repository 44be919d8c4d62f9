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

#ifndef LOGEO_SIGNATURE_HPP
#define LOGEO_SIGNATURE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logeo {

struct OpSymbol {
  std::string sym;
  std::size_t arity = 0;

  bool operator==(const OpSymbol&) const = default;
};

/// The variety marker. Only used to validate tables and to enable the
/// group-specific constructions; terms are never normalised modulo it.
struct Variety {
  enum class Kind { generic, group, abelian_group, abelian_exponent_p };

  Kind kind = Kind::generic;
  unsigned p = 0;  // only for abelian_exponent_p

  static Variety generic() { return {}; }
  static Variety group() { return {Kind::group, 0}; }
  static Variety abelian_group() { return {Kind::abelian_group, 0}; }
  static Variety abelian_exponent(unsigned p) { return {Kind::abelian_exponent_p, p}; }

  bool is_group() const { return kind != Kind::generic; }
  bool is_abelian() const {
    return kind == Kind::abelian_group || kind == Kind::abelian_exponent_p;
  }
  std::string to_string() const;

  bool operator==(const Variety&) const = default;
};

/// Operation indices of a group-like signature.
struct GroupOps {
  std::size_t mul;
  std::size_t inv;
  std::size_t unit;
};

class Signature {
 public:
  Signature(std::string name, std::vector<OpSymbol> ops,
            std::optional<std::string> infix = std::nullopt,
            Variety variety = Variety::generic());

  /// mul "*" (infix), inv, e.
  static Signature group(Variety variety = Variety::group());

  const std::string& name() const { return name_; }
  const std::vector<OpSymbol>& ops() const { return ops_; }
  const OpSymbol& op(std::size_t index) const { return ops_.at(index); }
  std::size_t op_count() const { return ops_.size(); }
  std::optional<std::size_t> find(std::string_view sym) const;
  std::optional<std::size_t> infix() const { return infix_; }
  const Variety& variety() const { return variety_; }

  /// Present exactly when the variety is a group variety.
  std::optional<GroupOps> group_ops() const { return group_ops_; }

  /// Same symbols, arities and infix marker; name and variety are ignored.
  bool same_language(const Signature& other) const;

 private:
  std::string name_;
  std::vector<OpSymbol> ops_;
  std::optional<std::size_t> infix_;
  Variety variety_;
  std::optional<GroupOps> group_ops_;
};

/// An ordered finite set of variables. The order defines the point encoding.
class VarSort {
 public:
  VarSort() = default;
  explicit VarSort(std::vector<std::string> names);
  VarSort(std::initializer_list<std::string> names)
      : VarSort(std::vector<std::string>(names)) {}

  /// Comma-separated identifiers, e.g. "x1,x2".
  static VarSort parse(std::string_view text);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Appends fresh variables; throws SortError on a clash.
  VarSort extended(const std::vector<std::string>& more) const;
  std::string to_string() const;

  bool operator==(const VarSort&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A term of the free algebra W(X). Variables are stored as indices into the
/// sort the term was built over; the sort itself travels separately.
class Term {
 public:
  static Term variable(std::size_t index);
  static Term apply(std::size_t op, std::vector<Term> children = {});

  bool is_variable() const { return node_->op == npos; }
  std::size_t var_index() const { return node_->var; }
  std::size_t op() const { return node_->op; }
  std::span<const Term> children() const { return node_->children; }

  /// Leaves have depth 1.
  std::size_t depth() const;
  std::size_t size() const;
  /// Largest variable index occurring, or nullopt for ground terms.
  std::optional<std::size_t> max_variable() const;
  void collect_variables(std::vector<bool>& seen) const;

  bool operator==(const Term& other) const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Node {
    std::size_t var = npos;
    std::size_t op = npos;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// SortError for a variable outside the sort; AlgebraError for an unknown
/// symbol or a wrong child count.
void check_term(const Signature& sig, const VarSort& sort, const Term& term);

Term parse_term(std::string_view text, const Signature& sig, const VarSort& sort);
/// Parses the longest term starting at `pos` and advances `pos` past it.
Term parse_term_prefix(std::string_view text, std::size_t& pos, const Signature& sig, const VarSort& sort);
std::string print_term(const Term& term, const Signature& sig, const VarSort& sort);

/// x^k as a left-associated product; x^0 is the unit. Group signatures only.
Term power_term(const Signature& sig, const Term& base, unsigned exponent);

/// A morphism s: W(X) -> W(Y), given by the image of each variable of X.
class Substitution {
 public:
  Substitution(VarSort source, VarSort target, std::vector<Term> images);

  static Substitution identity(const VarSort& sort);

  const VarSort& source() const { return source_; }
  const VarSort& target() const { return target_; }
  const Term& image(std::size_t source_var) const { return images_.at(source_var); }
  const std::vector<Term>& images() const { return images_; }

  /// Replaces every variable of a term over the source sort.
  Term apply(const Term& term) const;

  bool operator==(const Substitution&) const = default;

 private:
  VarSort source_;
  VarSort target_;
  std::vector<Term> images_;
};

/// Term-level half of s_*(w == w') = (sw == sw'). Checks that `sort` is the
/// substitution's source.
Term apply_substitution_term(const Substitution& s, const VarSort& sort, const Term& term);

/// `second` after `first`: x |-> second(first(x)).
Substitution compose(const Substitution& first, const Substitution& second);

/// s^x_w: x |-> w, every other variable fixed.
Substitution single_substitution(const VarSort& sort, std::string_view var, Term w);

}  // namespace logeo

#endif  // LOGEO_SIGNATURE_HPP
