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

#include "logeo/geometry.hpp"

#include "logeo/error.hpp"

namespace logeo {

PointSet algebraic_set(const EquationSystem& t, const AlgebraPtr& h) {
  Space space(h, t.sort);
  PointSet out = PointSet::full(space);
  for (const auto& [w, wp] : t.pairs) out = out & equality_value(space, w, wp);
  return out;
}

bool in_equational_closure(const EquationSystem& t, const Term& w0, const Term& w0p, const AlgebraPtr& h) {
  PointSet a = algebraic_set(t, h);
  return a.subset_of(equality_value(a.space(), w0, w0p));
}

PointSet elementary_set(const FormulaSystem& t, const AlgebraPtr& h) {
  Space space(h, t.sort);
  PointSet out = PointSet::full(space);
  for (const auto& u : t.formulas) out = out & value(u, space);
  return out;
}

bool in_logical_closure(const FormulaSystem& t, const Formula& v, const AlgebraPtr& h) {
  PointSet a = elementary_set(t, h);
  return a.subset_of(value(v, a.space()));
}

FormulaSystem logical_annihilator(const PointSet& a, const std::vector<Formula>& candidates) {
  FormulaSystem out{a.space().sort(), {}};
  for (const auto& u : candidates) {
    if (a.subset_of(value(u, a.space()))) out.formulas.push_back(u);
  }
  return out;
}

EquationSystem equational_annihilator(const PointSet& a, const std::vector<std::pair<Term, Term>>& candidates) {
  EquationSystem out{a.space().sort(), {}};
  for (const auto& pair : candidates) {
    if (a.subset_of(equality_value(a.space(), pair.first, pair.second))) out.pairs.push_back(pair);
  }
  return out;
}

ElementaryVerdict is_elementary(const PointSet& a, const Partition& rho) {
  if (!(a.space() == rho.space())) throw SortError("point set and partition over different spaces");
  std::vector<std::uint8_t> seen(rho.class_count(), 0);  // bit 0: inside A, bit 1: outside A
  for (PointIndex i = 0; i < rho.ids().size(); ++i) seen[rho.class_of(i)] |= a.contains(i) ? 1 : 2;
  ElementaryVerdict verdict{true, {}};
  for (std::uint32_t id = 0; id < seen.size(); ++id) {
    if (seen[id] == 3) verdict.elementary = false;
    if (seen[id] == 1) verdict.classes.push_back(id);
  }
  return verdict;
}

ElementaryVerdict is_elementary(const PointSet& a) {
  return is_elementary(a, rho_partition(a.space().algebra(), a.space().sort()).partition);
}

PointSet point_closure(std::span<const Element> point, const AlgebraPtr& h, const VarSort& sort) {
  Partition rho = rho_partition(h, sort).partition;
  return rho.class_set(rho.class_of(rho.space().index(point)));
}

std::size_t default_tau_depth(const FiniteAlgebra& h, std::span<const Element> point) {
  return 1 + closure_trace(h, point).rounds;
}

FormulaSystem tau_coset_formula_system(const AlgebraPtr& h, const VarSort& sort, std::span<const Element> point,
                                       std::optional<std::size_t> depth_bound) {
  if (point.size() != sort.size()) throw SortError("point does not match the sort");
  const std::size_t bound = depth_bound ? *depth_bound : default_tau_depth(*h, point);
  if (bound == 0) throw Error("depth bound must be at least 1");
  const Signature& sig = h->signature();
  ClosureTrace trace = closure_trace(*h, point);

  std::vector<Term> reps;
  for (const auto& step : trace.steps) {
    if (step.generator) {
      reps.push_back(Term::variable(*step.generator));
    } else {
      std::vector<Term> children;
      for (auto i : step.args) children.push_back(reps[i]);
      reps.push_back(Term::apply(step.op, std::move(children)));
    }
  }

  FormulaSystem out{sort, {}};
  auto equate = [&](const Term& lhs, const Term& rhs) {
    if (lhs == rhs || lhs.depth() > bound || rhs.depth() > bound) return;
    out.formulas.push_back(Formula::equality(sort, lhs, rhs));
  };
  auto rep_of = [&](Element a) -> const Term& { return reps[trace.step_of[a]]; };

  for (std::size_t i = 0; i < point.size(); ++i) equate(Term::variable(i), rep_of(point[i]));
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    const std::size_t arity = sig.op(op).arity;
    if (arity == 0) {
      equate(Term::apply(op), rep_of(h->constant(op)));
      continue;
    }
    std::vector<std::size_t> idx(arity, 0);
    args.resize(arity);
    const std::size_t count = trace.steps.size();
    while (true) {
      std::vector<Term> children;
      for (std::size_t k = 0; k < arity; ++k) {
        args[k] = trace.steps[idx[k]].element;
        children.push_back(reps[idx[k]]);
      }
      equate(Term::apply(op, std::move(children)), rep_of(h->apply(op, args)));
      std::size_t k = arity;
      while (k > 0 && ++idx[k - 1] == count) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if (reps[a].depth() > bound || reps[b].depth() > bound) continue;
      out.formulas.push_back(Formula::negation(Formula::equality(sort, reps[a], reps[b])));
    }
  }
  return out;
}

}  // namespace logeo
