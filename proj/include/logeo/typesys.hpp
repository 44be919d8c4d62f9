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

#ifndef LOGEO_TYPESYS_HPP
#define LOGEO_TYPESYS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logeo/algebra.hpp"
#include "logeo/formula.hpp"
#include "logeo/space.hpp"

namespace logeo {

/// An equivalence on a point space. Class ids are contiguous and assigned in
/// order of each class's least point index.
class Partition {
 public:
  /// Canonicalises arbitrary labels.
  Partition(Space space, std::span<const std::uint64_t> labels);

  const Space& space() const { return space_; }
  std::size_t class_count() const { return class_count_; }
  std::uint32_t class_of(PointIndex point) const { return ids_[point]; }
  const std::vector<std::uint32_t>& ids() const { return ids_; }
  std::vector<std::vector<PointIndex>> classes() const;
  PointSet class_set(std::uint32_t id) const;

  /// Every class of *this lies inside a class of `coarser`.
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition& other) const { return ids_ == other.ids_; }

 private:
  Space space_;
  std::vector<std::uint32_t> ids_;
  std::size_t class_count_ = 0;
};

/// mu tau nu iff a_i -> b_i extends to an isomorphism of generated subalgebras.
Partition tau_partition(const AlgebraPtr& h, const VarSort& sort);

/// Back-and-forth refinement from tau, re-assigning one coordinate at a time,
/// to a fixpoint. Decides equivalence under the quantified formulas over the
/// sort's own variables. `pebbles` must equal |sort|.
Partition pebble_partition(const AlgebraPtr& h, const VarSort& sort, std::size_t pebbles);

struct RhoResult {
  Partition partition;
  /// Auxiliary variables in the last refinement that ran.
  std::size_t aux_vars = 0;
  /// The smallest auxiliary count already giving the final partition.
  std::size_t witness_aux_vars = 0;
  /// False when a guard stopped escalation before two equal rounds.
  bool stabilized = true;
  std::string note;
};

/// LKer-equivalence by sort escalation: pebble partitions over X plus j
/// auxiliary variables, projected back through y_j := x_1, until two
/// consecutive j agree. Guard: j <= |H| and the point guard.
RhoResult rho_partition(const AlgebraPtr& h, const VarSort& sort);

/// Orbits of the coordinatewise Aut(H) action.
Partition orbit_partition(const AlgebraPtr& h, const VarSort& sort);
Partition orbit_partition(const AlgebraPtr& h, const VarSort& sort, const AutGroup& aut);

struct ChainReport {
  bool orbit_in_rho = false;
  bool rho_in_tau = false;
  std::size_t tau_classes = 0;
  std::size_t rho_classes = 0;
  std::size_t orbit_classes = 0;
  bool holds() const { return orbit_in_rho && rho_in_tau; }
};

ChainReport chain_check(const AlgebraPtr& h, const VarSort& sort);

bool is_logically_perfect(const AlgebraPtr& h, const VarSort& sort);
bool is_homogeneous(const AlgebraPtr& h, const VarSort& sort);
bool is_strictly_perfect(const AlgebraPtr& h, const VarSort& sort);

/// A formula over `sort` true at `a` and false at `b`, synthesised from the
/// refinement that separates them; nullopt when rho does not separate them.
std::optional<Formula> separating_formula(const AlgebraPtr& h, const VarSort& sort,
                                          std::span<const Element> a,
                                          std::span<const Element> b);

struct TypeRow {
  std::uint32_t class_id = 0;
  std::uint64_t size = 0;
  std::vector<Element> representative;
  std::optional<Formula> defining_formula;
};

struct TypeCensus {
  Partition partition;
  std::vector<TypeRow> rows;
  bool stabilized = true;
};

TypeCensus type_census(const AlgebraPtr& h, const VarSort& sort, bool with_formulas = true);

struct IsotypyResult {
  bool isotyped = false;
  /// Closed formula true in one algebra and false in the other.
  std::optional<Formula> witness;
  /// Which algebra satisfies the witness: 1 or 2.
  int witness_holds_in = 0;
  std::size_t aux_vars = 0;
  bool stabilized = true;
};

IsotypyResult isotyped(const AlgebraPtr& h1, const AlgebraPtr& h2, const VarSort& sort);

struct ExponentCensus {
  unsigned p = 0, m = 0, n = 0;
  std::size_t subgroup_count = 0;  // subgroups T of W(X) = (Z/p)^n
  std::size_t orbit_count = 0;
  std::size_t realised_kernels = 0;  // T with Val(u_T) non-empty
  bool every_value_is_one_orbit = false;
  bool orbits_exhausted = false;
  struct Row {
    std::vector<std::vector<unsigned>> kernel_basis;  // generators of T as coefficient vectors
    std::uint64_t value_size = 0;
    bool single_orbit = false;
  };
  std::vector<Row> rows;
  bool ok() const {
    return every_value_is_one_orbit && orbits_exhausted && orbit_count == subgroup_count;
  }
};

/// H = (Z/p)^m, |X| = n. For each subgroup T of (Z/p)^n builds
/// u_T = (AND_{w in T} w == e) & (AND_{v not in T} v != e) and compares
/// Val(u_T) with the Aut(H)-orbits. Throws when m < n.
ExponentCensus exponent_p_census(unsigned p, unsigned m, unsigned n);

struct OrderCensus {
  std::size_t formula_count = 0;
  std::size_t orbit_count = 0;
  bool every_value_is_one_orbit = false;
  bool orbits_exhausted = false;
  struct Row {
    std::vector<std::uint64_t> orders;  // element order per variable
    Formula formula;
    std::uint64_t value_size = 0;
    bool single_orbit = false;
  };
  std::vector<Row> rows;
  bool ok() const { return every_value_is_one_orbit && orbits_exhausted; }
};

/// Order formula of one variable: x == e for order 1, otherwise
/// x^m == e & x != e & AND_{d | m, 1 < d < m} x^d != e.
Formula order_formula(const Signature& sig, const VarSort& sort, std::size_t var,
                      std::uint64_t order);

/// H must be an abelian group of square-free order (a product of cyclic
/// groups of distinct primes).
OrderCensus order_formula_census(const AlgebraPtr& h, const VarSort& sort);

std::uint64_t element_order(const FiniteAlgebra& h, Element a);

}  // namespace logeo

#endif  // LOGEO_TYPESYS_HPP
