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

#include "logeo/axioms.hpp"

#include <functional>

#include "logeo/error.hpp"
#include "refine.hpp"

namespace logeo {

std::size_t RandomSource::below(std::size_t bound) {
  if (bound == 0) throw Error("empty range");
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

namespace {

std::vector<std::size_t> ops_with_arity(const Signature& sig, bool nullary) {
  std::vector<std::size_t> out;
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    if ((sig.op(op).arity == 0) == nullary) out.push_back(op);
  }
  return out;
}

}  // namespace

Term RandomSource::term(const Signature& sig, const VarSort& sort, std::size_t max_depth) {
  const auto constants = ops_with_arity(sig, true);
  const auto functions = ops_with_arity(sig, false);
  const bool leaf = max_depth <= 1 || functions.empty() || below(5) < 2;
  if (leaf) {
    if (sort.empty() || (!constants.empty() && below(4) == 0)) {
      if (constants.empty()) throw Error("no ground terms in this signature");
      return Term::apply(constants[below(constants.size())]);
    }
    return Term::variable(below(sort.size()));
  }
  const std::size_t op = functions[below(functions.size())];
  std::vector<Term> children;
  for (std::size_t k = 0; k < sig.op(op).arity; ++k) children.push_back(term(sig, sort, max_depth - 1));
  return Term::apply(op, std::move(children));
}

Substitution RandomSource::substitution(const Signature& sig, const VarSort& source, const VarSort& target,
                                        std::size_t max_depth) {
  std::vector<Term> images;
  for (std::size_t i = 0; i < source.size(); ++i) images.push_back(term(sig, target, max_depth));
  return Substitution(source, target, std::move(images));
}

Formula RandomSource::formula(const Signature& sig, const VarSort& sort, std::size_t max_depth,
                              const std::vector<VarSort>& inner_sorts) {
  if (max_depth <= 1) return Formula::equality(sort, term(sig, sort, 3), term(sig, sort, 3));
  const std::size_t kinds = inner_sorts.empty() ? 6 : 7;
  switch (below(kinds)) {
    case 0:
      return Formula::equality(sort, term(sig, sort, 3), term(sig, sort, 3));
    case 1:
      return Formula::negation(formula(sig, sort, max_depth - 1, inner_sorts));
    case 2:
      return Formula::conjunction(formula(sig, sort, max_depth - 1, inner_sorts),
                                  formula(sig, sort, max_depth - 1, inner_sorts));
    case 3:
      return Formula::disjunction(formula(sig, sort, max_depth - 1, inner_sorts),
                                  formula(sig, sort, max_depth - 1, inner_sorts));
    case 4:
      if (sort.empty()) return formula(sig, sort, max_depth - 1, inner_sorts);
      return Formula::exists(below(sort.size()), formula(sig, sort, max_depth - 1, inner_sorts));
    case 5:
      if (sort.empty()) return formula(sig, sort, max_depth - 1, inner_sorts);
      return Formula::forall(below(sort.size()), formula(sig, sort, max_depth - 1, inner_sorts));
    default: {
      const VarSort& inner = inner_sorts[below(inner_sorts.size())];
      return Formula::substitution(substitution(sig, inner, sort, 2),
                                   formula(sig, inner, max_depth - 1, inner_sorts));
    }
  }
}

PointSet RandomSource::point_set(const Space& space) {
  PointSet out = PointSet::empty(space);
  for (PointIndex i = 0; i < space.point_count(); ++i) {
    if (coin()) out.insert(i);
  }
  return out;
}

std::vector<Element> RandomSource::point(const Space& space) {
  std::vector<Element> out(space.sort().size());
  for (auto& a : out) a = static_cast<Element>(below(space.h().size()));
  return out;
}

bool AxiomReport::ok() const { return total_violations() == 0; }

std::size_t AxiomReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& r : results) total += r.violations;
  return total;
}

namespace {

constexpr std::size_t kFormulaDepth = 3;
constexpr std::uint64_t kSecondSortPoints = 4096;

class Suite {
 public:
  Suite(const AlgebraPtr& h, const VarSort& sort, std::uint64_t seed)
      : h_(h), sig_(h->signature()), x_(sort), y_(second_sort(h, sort)), sx_(h, x_), sy_(h, y_), rng_(seed) {}

  AxiomReport run(std::size_t samples);

 private:
  static VarSort second_sort(const AlgebraPtr& h, const VarSort& sort) {
    std::uint64_t points = 1;
    for (std::size_t i = 0; i <= sort.size(); ++i) points *= h->size();
    if (points > kSecondSortPoints) return sort;
    return sort.extended(detail::aux_names(sort, h->signature(), 1));
  }

  Formula fx() { return rng_.formula(sig_, x_, kFormulaDepth, {y_}); }
  Formula fy() { return rng_.formula(sig_, y_, kFormulaDepth, {x_}); }
  Term tx() { return rng_.term(sig_, x_, 3); }
  Substitution s_xy() { return rng_.substitution(sig_, x_, y_, 2); }
  std::string show(const Formula& u) { return print_formula(u, sig_); }

  // Runs `check` `samples` times; it returns an empty string on success.
  void axiom(const std::string& name, std::size_t samples, const std::function<std::string()>& check) {
    AxiomResult r;
    r.name = name;
    for (std::size_t i = 0; i < samples; ++i) {
      std::string failure = check();
      ++r.instances;
      if (!failure.empty()) {
        if (r.violations++ == 0) r.first_violation = failure;
      }
    }
    report_.results.push_back(std::move(r));
  }

  AlgebraPtr h_;
  const Signature& sig_;
  VarSort x_, y_;
  Space sx_, sy_;
  RandomSource rng_;
  AxiomReport report_;
};

AxiomReport Suite::run(std::size_t samples) {
  report_.algebra = h_->name();
  report_.sort = x_.to_string();
  const std::size_t n = x_.size();
  auto var = [&] { return rng_.below(n); };

  if (n > 0) {
    axiom("exists: E x. 0 = 0", samples, [&]() -> std::string {
      Formula u = fx();
      Formula zero = Formula::conjunction(u, Formula::negation(u));
      Formula q = Formula::exists(var(), zero);
      return value(q, sx_).is_empty() ? "" : show(q);
    });
    axiom("exists: a <= E x. a", samples, [&]() -> std::string {
      Formula u = fx();
      Formula q = Formula::exists(var(), u);
      return value(u, sx_).subset_of(value(q, sx_)) ? "" : show(q);
    });
    axiom("exists: E x.(a & E x. b) = E x. a & E x. b", samples, [&]() -> std::string {
      Formula a = fx(), b = fx();
      const std::size_t x = var();
      Formula lhs = Formula::exists(x, Formula::conjunction(a, Formula::exists(x, b)));
      Formula rhs = Formula::conjunction(Formula::exists(x, a), Formula::exists(x, b));
      return value(lhs, sx_) == value(rhs, sx_) ? "" : show(lhs) + "  vs  " + show(rhs);
    });
    axiom("forall: A x. 1 = 1", samples, [&]() -> std::string {
      Formula u = fx();
      Formula one = Formula::disjunction(u, Formula::negation(u));
      Formula q = Formula::forall(var(), one);
      return value(q, sx_).is_full() ? "" : show(q);
    });
    axiom("forall: A x. a <= a", samples, [&]() -> std::string {
      Formula u = fx();
      Formula q = Formula::forall(var(), u);
      return value(q, sx_).subset_of(value(u, sx_)) ? "" : show(q);
    });
    axiom("forall: A x.(a | A x. b) = A x. a | A x. b", samples, [&]() -> std::string {
      Formula a = fx(), b = fx();
      const std::size_t x = var();
      Formula lhs = Formula::forall(x, Formula::disjunction(a, Formula::forall(x, b)));
      Formula rhs = Formula::disjunction(Formula::forall(x, a), Formula::forall(x, b));
      return value(lhs, sx_) == value(rhs, sx_) ? "" : show(lhs) + "  vs  " + show(rhs);
    });
    axiom("duality: !(E x. a) = A x. !a", samples, [&]() -> std::string {
      Formula a = fx();
      const std::size_t x = var();
      Formula lhs = Formula::negation(Formula::exists(x, a));
      Formula rhs = Formula::forall(x, Formula::negation(a));
      return value(lhs, sx_) == value(rhs, sx_) ? "" : show(lhs);
    });
    axiom("commutation: E x. E y. a = E y. E x. a", samples, [&]() -> std::string {
      Formula a = fx();
      const std::size_t x = var(), y = var();
      Formula lhs = Formula::exists(x, Formula::exists(y, a));
      Formula rhs = Formula::exists(y, Formula::exists(x, a));
      return value(lhs, sx_) == value(rhs, sx_) ? "" : show(lhs);
    });
  }

  axiom("2.1: w == w is the unit", samples, [&]() -> std::string {
    Term w = tx();
    Formula u = Formula::equality(x_, w, w);
    return value(u, sx_).is_full() ? "" : show(u);
  });

  const auto functions = ops_with_arity(sig_, false);
  if (!functions.empty()) {
    axiom("2.2: AND w_i == w'_i <= w omega == w' omega", samples, [&]() -> std::string {
      const std::size_t op = functions[rng_.below(functions.size())];
      std::vector<Term> ws, wps;
      std::vector<Formula> premises;
      for (std::size_t k = 0; k < sig_.op(op).arity; ++k) {
        ws.push_back(tx());
        // Bias towards satisfiable premises by reusing the left term.
        wps.push_back(rng_.coin() ? ws.back() : tx());
        premises.push_back(Formula::equality(x_, ws.back(), wps.back()));
      }
      Formula premise = Formula::conjunction_of(premises);
      Formula conclusion = Formula::equality(x_, Term::apply(op, ws), Term::apply(op, wps));
      return value(premise, sx_).subset_of(value(conclusion, sx_)) ? "" : show(premise);
    });
  }

  if (n > 0) {
    axiom("3.1: s1 E x. a = s2 E x. a when s1, s2 agree off x", samples, [&]() -> std::string {
      Formula a = Formula::exists(var(), fx());
      const std::size_t x = a.variable();
      Substitution s1 = s_xy();
      std::vector<Term> images = s1.images();
      images[x] = rng_.term(sig_, y_, 2);
      Substitution s2(x_, y_, images);
      Formula lhs = Formula::substitution(s1, a), rhs = Formula::substitution(s2, a);
      return value(lhs, sy_) == value(rhs, sy_) ? "" : show(lhs) + "  vs  " + show(rhs);
    });

    axiom("3.2: s E x. a = E sx. s a when sx is a fresh variable", samples, [&]() -> std::string {
      const std::size_t x = var();
      const std::size_t y = rng_.below(y_.size());
      std::vector<Term> images;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == x) {
          images.push_back(Term::variable(y));
          continue;
        }
        std::optional<Term> t;
        for (int attempt = 0; attempt < 50 && !t; ++attempt) {
          Term c = rng_.term(sig_, y_, 2);
          std::vector<bool> used(y_.size(), false);
          c.collect_variables(used);
          if (!used[y]) t = c;
        }
        if (!t) {
          const auto constants = ops_with_arity(sig_, true);
          if (constants.empty()) return "";
          t = Term::apply(constants.front());
        }
        images.push_back(*t);
      }
      Substitution s(x_, y_, images);
      Formula a = fx();
      Formula lhs = Formula::substitution(s, Formula::exists(x, a));
      Formula rhs = Formula::exists(y, Formula::substitution(s, a));
      return value(lhs, sy_) == value(rhs, sy_) ? "" : show(lhs) + "  vs  " + show(rhs);
    });
  }

  axiom("4.1: s(w == w') = (sw == sw')", samples, [&]() -> std::string {
    Substitution s = s_xy();
    Term w = tx(), wp = tx();
    Formula lhs = Formula::substitution(s, Formula::equality(x_, w, wp));
    Formula rhs =
        Formula::equality(y_, apply_substitution_term(s, x_, w), apply_substitution_term(s, x_, wp));
    return value(lhs, sy_) == value(rhs, sy_) ? "" : show(lhs);
  });

  if (n > 0) {
    axiom("4.2: s^x_w a & w == w' <= s^x_w' a", samples, [&]() -> std::string {
      const std::string& x = x_.name(var());
      Term w = tx(), wp = rng_.coin() ? w : tx();
      Formula a = fx();
      Formula lhs = Formula::conjunction(Formula::substitution(single_substitution(x_, x, w), a),
                                         Formula::equality(x_, w, wp));
      Formula rhs = Formula::substitution(single_substitution(x_, x, wp), a);
      return value(lhs, sx_).subset_of(value(rhs, sx_)) ? "" : show(lhs);
    });
  }

  axiom("diagram: Val agrees with pointwise evaluation", samples, [&]() -> std::string {
    Formula u = fx();
    PointSet val = value(u, sx_);
    for (int k = 0; k < 8; ++k) {
      auto mu = rng_.point(sx_);
      if (val.contains(mu) != satisfies(u, *h_, mu)) return show(u) + " at " + format_tuple(mu);
    }
    Substitution s = s_xy();
    Formula su = Formula::substitution(s, u);
    PointSet sval = value(su, sy_);
    if (!(sval == sstar_pointset(s, val))) return show(su);
    for (int k = 0; k < 8; ++k) {
      auto mu = rng_.point(sy_);
      if (sval.contains(mu) != satisfies(su, *h_, mu)) return show(su) + " at " + format_tuple(mu);
    }
    return "";
  });

  axiom("s_* is a Boolean homomorphism", samples, [&]() -> std::string {
    Substitution s = s_xy();
    Formula a = fx(), b = fx();
    auto sv = [&](const Formula& u) { return value(Formula::substitution(s, u), sy_); };
    if (!(sv(Formula::conjunction(a, b)) == (sv(a) & sv(b)))) return "meet: " + show(a) + " ; " + show(b);
    if (!(sv(Formula::disjunction(a, b)) == (sv(a) | sv(b)))) return "join: " + show(a) + " ; " + show(b);
    if (!(sv(Formula::negation(a)) == ~sv(a))) return "complement: " + show(a);
    return "";
  });

  axiom("functor: (s2 s1)_* = s2_* s1_*", samples, [&]() -> std::string {
    Substitution s1 = s_xy();
    Substitution s2 = rng_.substitution(sig_, y_, x_, 2);
    Formula a = fx();
    Formula lhs = Formula::substitution(compose(s1, s2), a);
    Formula rhs = Formula::substitution(s2, Formula::substitution(s1, a));
    return value(lhs, sx_) == value(rhs, sx_) ? "" : show(lhs);
  });

  axiom("(s_*T)^L = s_*(T^L)", samples, [&]() -> std::string {
    Substitution s = s_xy();
    PointSet tl = PointSet::full(sx_), stl = PointSet::full(sy_);
    const std::size_t count = 1 + rng_.below(3);
    for (std::size_t k = 0; k < count; ++k) {
      Formula u = fx();
      tl = tl & value(u, sx_);
      stl = stl & value(Formula::substitution(s, u), sy_);
    }
    return stl == sstar_pointset(s, tl) ? "" : "system of " + std::to_string(count) + " formulas";
  });

  axiom("s_* LKer(mu s) <= LKer(mu)", samples, [&]() -> std::string {
    Substitution s = s_xy();
    auto mu = rng_.point(sy_);
    std::vector<Element> mus;
    for (const auto& t : s.images()) mus.push_back(eval_point(*h_, t, mu));
    Formula u = fx();
    if (!value(u, sx_).contains(mus)) return "";
    Formula su = Formula::substitution(s, u);
    return value(su, sy_).contains(mu) ? "" : show(su) + " at " + format_tuple(mu);
  });

  return report_;
}

}  // namespace

AxiomReport run_axiom_suite(const AlgebraPtr& h, const VarSort& sort, std::size_t samples, std::uint64_t seed) {
  return Suite(h, sort, seed).run(samples);
}

}  // namespace logeo
