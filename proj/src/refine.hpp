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

#ifndef LOGEO_SRC_REFINE_HPP
#define LOGEO_SRC_REFINE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "logeo/formula.hpp"
#include "logeo/space.hpp"

namespace logeo::detail {

using ClassIds = std::vector<std::uint32_t>;

/// The point spaces of one or two algebras over one sort, numbered
/// consecutively: all points of part 0, then all points of part 1.
class JointSpace {
 public:
  JointSpace(const std::vector<AlgebraPtr>& algebras, const VarSort& sort, const Guards& guards);

  std::size_t parts() const { return spaces_.size(); }
  const Space& space(std::size_t part) const { return spaces_[part]; }
  const FiniteAlgebra& algebra(std::size_t part) const { return spaces_[part].h(); }
  const VarSort& sort() const { return spaces_[0].sort(); }
  std::uint64_t size() const { return offsets_.back(); }
  std::uint64_t offset(std::size_t part) const { return offsets_[part]; }
  std::size_t part_of(std::uint64_t g) const { return g < offsets_[1] ? 0 : 1; }

  std::vector<Element> decode(std::uint64_t g) const;
  std::uint64_t encode(std::size_t part, std::span<const Element> point) const;
  std::uint64_t with_coordinate(std::uint64_t g, std::size_t var, Element a) const;
  std::size_t carrier_of(std::uint64_t g) const { return algebra(part_of(g)).size(); }

  bool holds(const Formula& u, std::uint64_t g) const;

 private:
  std::vector<Space> spaces_;
  std::vector<std::uint64_t> offsets_;
};

/// Relabels by order of first appearance.
ClassIds canonical_ids(std::span<const std::uint64_t> labels);
ClassIds canonical_ids(std::span<const std::uint32_t> labels);
std::size_t class_count(const ClassIds& ids);

/// Atomic-kernel classes: two points agree iff a_i -> b_i extends to an
/// isomorphism of the generated subalgebras. Computed by comparing a
/// canonical encoding of each generated subalgebra.
ClassIds tau_ids(const JointSpace& space);

/// Refinement rounds from tau to the fixpoint. Round r+1 splits points whose
/// round-r class or, for some variable, set of round-r classes reachable by
/// re-assigning that variable differs.
class Refinement {
 public:
  explicit Refinement(JointSpace space);

  const JointSpace& space() const { return space_; }
  std::size_t rounds() const { return levels_.size(); }
  const ClassIds& level(std::size_t r) const { return levels_[r]; }
  const ClassIds& final_ids() const { return levels_.back(); }
  std::uint32_t final_class(std::uint64_t g) const { return levels_.back()[g]; }

  /// A formula true at p and false at every q. Each q must lie in a
  /// different final class than p. The formula's value is a union of final
  /// classes.
  Formula separator(std::uint64_t p, std::span<const std::uint64_t> qs) const;

 private:
  std::vector<std::uint32_t> reachable(std::size_t r, std::uint64_t g, std::size_t var) const;
  Formula separate(std::uint64_t p, std::vector<std::uint64_t> qs, std::size_t r) const;
  Formula separate_atomic(std::uint64_t p, const std::vector<std::uint64_t>& qs) const;
  Formula truth() const;

  JointSpace space_;
  std::vector<ClassIds> levels_;
};

/// Names for auxiliary variables avoiding the sort and the operation symbols.
std::vector<std::string> aux_names(const VarSort& sort, const Signature& sig, std::size_t count);

/// s: X u Y -> X with x_i -> x_i and every auxiliary variable -> x_1.
Substitution aux_lift(const VarSort& extended, const VarSort& sort);

}  // namespace logeo::detail

#endif  // LOGEO_SRC_REFINE_HPP
