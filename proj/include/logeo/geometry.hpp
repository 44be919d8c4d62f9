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

#ifndef LOGEO_GEOMETRY_HPP
#define LOGEO_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "logeo/formula.hpp"
#include "logeo/space.hpp"
#include "logeo/typesys.hpp"

namespace logeo {

struct EquationSystem {
  VarSort sort;
  std::vector<std::pair<Term, Term>> pairs;
};

struct FormulaSystem {
  VarSort sort;
  std::vector<Formula> formulas;
};

/// T'_H: the points whose kernel contains every pair.
PointSet algebraic_set(const EquationSystem& t, const AlgebraPtr& h);

/// (w0, w0') in T''_H, i.e. the quasiidentity AND T -> w0 == w0' holds in H.
bool in_equational_closure(const EquationSystem& t, const Term& w0, const Term& w0p,
                           const AlgebraPtr& h);

/// T^L_H: intersection of the values.
PointSet elementary_set(const FormulaSystem& t, const AlgebraPtr& h);

/// v in T^LL_H, i.e. the implication AND T -> v holds in H.
bool in_logical_closure(const FormulaSystem& t, const Formula& v, const AlgebraPtr& h);

/// A^L_H restricted to a finite candidate list: the candidates true on all of A.
FormulaSystem logical_annihilator(const PointSet& a, const std::vector<Formula>& candidates);

/// A' restricted to candidate pairs: the pairs satisfied at every point of A.
EquationSystem equational_annihilator(const PointSet& a,
                                      const std::vector<std::pair<Term, Term>>& candidates);

struct ElementaryVerdict {
  bool elementary = false;
  /// Rho classes contained in A (the certificate when elementary).
  std::vector<std::uint32_t> classes;
};

/// A is elementary iff it is a union of rho classes.
ElementaryVerdict is_elementary(const PointSet& a, const Partition& rho);
ElementaryVerdict is_elementary(const PointSet& a);

/// {mu}^LL_H, the rho class of mu.
PointSet point_closure(std::span<const Element> point, const AlgebraPtr& h, const VarSort& sort);

/// Finite T' = T'_1 u T'_2 from the closure trace of mu's image: table
/// equations among representative terms and inequalities between distinct
/// representatives, restricted to terms of depth <= bound. The default bound
/// is 1 + the number of closure rounds, which makes the system exact.
FormulaSystem tau_coset_formula_system(const AlgebraPtr& h, const VarSort& sort,
                                       std::span<const Element> point,
                                       std::optional<std::size_t> depth_bound = std::nullopt);

std::size_t default_tau_depth(const FiniteAlgebra& h, std::span<const Element> point);

}  // namespace logeo

#endif  // LOGEO_GEOMETRY_HPP
