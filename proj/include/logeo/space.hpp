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

#ifndef LOGEO_SPACE_HPP
#define LOGEO_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "logeo/algebra.hpp"
#include "logeo/guards.hpp"
#include "logeo/signature.hpp"

namespace logeo {

using PointIndex = std::uint64_t;

/// The affine space Hom(W(X), H) = H^n. Point encoding is little-endian in
/// sort order: index = sum_i a_i * |H|^i.
class Space {
 public:
  Space(AlgebraPtr algebra, VarSort sort, const Guards& guards = Guards::defaults());

  const AlgebraPtr& algebra() const { return algebra_; }
  const FiniteAlgebra& h() const { return *algebra_; }
  const VarSort& sort() const { return sort_; }
  std::uint64_t point_count() const { return count_; }
  std::uint64_t stride(std::size_t var) const { return strides_[var]; }

  PointIndex index(std::span<const Element> point) const;
  std::vector<Element> decode(PointIndex index) const;
  Element coordinate(PointIndex index, std::size_t var) const {
    return static_cast<Element>((index / strides_[var]) % algebra_->size());
  }
  PointIndex with_coordinate(PointIndex index, std::size_t var, Element value) const {
    return index - strides_[var] * coordinate(index, var) + strides_[var] * value;
  }
  std::size_t var_index(std::string_view name) const;

  /// Same algebra object (or identical algebra) and same sort.
  bool operator==(const Space& other) const;

 private:
  AlgebraPtr algebra_;
  VarSort sort_;
  std::uint64_t count_ = 1;
  std::vector<std::uint64_t> strides_;
};

std::string format_tuple(std::span<const Element> point);

/// An element of Bool(W(X), H): a subset of the point space as a bit-vector.
class PointSet {
 public:
  static PointSet empty(const Space& space);
  static PointSet full(const Space& space);
  static PointSet from_indices(const Space& space, std::span<const PointIndex> indices);

  const Space& space() const { return space_; }
  bool contains(PointIndex index) const { return bits_.test(index); }
  bool contains(std::span<const Element> point) const { return contains(space_.index(point)); }
  void insert(PointIndex index) { bits_.set(index); }
  void erase(PointIndex index) { bits_.reset(index); }
  std::uint64_t count() const { return bits_.count(); }
  bool is_empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }
  bool subset_of(const PointSet& other) const;
  std::vector<PointIndex> indices() const;
  const boost::dynamic_bitset<>& bits() const { return bits_; }

  /// "{0, 2}" for one variable, "{(0,1), (1,0)}" otherwise.
  std::string to_string() const;
  /// Hex of the integer sum_i bit_i * 2^i, most significant digit first,
  /// ceil(N/4) digits.
  std::string to_hex() const;

  PointSet operator|(const PointSet& other) const;
  PointSet operator&(const PointSet& other) const;
  PointSet operator~() const;
  bool operator==(const PointSet& other) const;

 private:
  PointSet(Space space, boost::dynamic_bitset<> bits)
      : space_(std::move(space)), bits_(std::move(bits)) {}
  void require_same_space(const PointSet& other) const;

  Space space_;
  boost::dynamic_bitset<> bits_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_complement(const PointSet& a);

Element eval_point(const FiniteAlgebra& h, const Term& term, std::span<const Element> point);
/// The term's value at every point of the space, indexed by point.
std::vector<Element> eval_everywhere(const Space& space, const Term& term);

PointSet equality_value(const Space& space, const Term& lhs, const Term& rhs);

PointSet exists_x(const PointSet& a, std::size_t var);
PointSet exists_x(const PointSet& a, std::string_view var);
PointSet forall_x(const PointSet& a, std::size_t var);
PointSet forall_x(const PointSet& a, std::string_view var);

/// s_* A = { mu over s.target : mu o s in A }.
PointSet sstar_pointset(const Substitution& s, const PointSet& a);

}  // namespace logeo

#endif  // LOGEO_SPACE_HPP
