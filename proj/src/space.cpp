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

#include "logeo/space.hpp"

#include <sstream>

#include "logeo/error.hpp"

namespace logeo {

Space::Space(AlgebraPtr algebra, VarSort sort, const Guards& guards)
    : algebra_(std::move(algebra)), sort_(std::move(sort)) {
  if (!algebra_) throw Error("space over a null algebra");
  const std::uint64_t m = algebra_->size();
  for (std::size_t i = 0; i < sort_.size(); ++i) {
    strides_.push_back(count_);
    if (count_ > guards.max_points / m) {
      throw GuardError("point space " + std::to_string(m) + "^" + std::to_string(sort_.size()) +
                       " exceeds guard of " + std::to_string(guards.max_points) + " points");
    }
    count_ *= m;
  }
  if (count_ > guards.max_points) throw GuardError("point space exceeds guard");
}

PointIndex Space::index(std::span<const Element> point) const {
  if (point.size() != sort_.size()) throw SortError("point has the wrong number of coordinates");
  PointIndex idx = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] >= algebra_->size()) throw SortError("coordinate outside the carrier");
    idx += strides_[i] * point[i];
  }
  return idx;
}

std::vector<Element> Space::decode(PointIndex index) const {
  std::vector<Element> out(sort_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coordinate(index, i);
  return out;
}

std::size_t Space::var_index(std::string_view name) const {
  auto i = sort_.index_of(name);
  if (!i) throw SortError("variable '" + std::string(name) + "' not in sort {" + sort_.to_string() + "}");
  return *i;
}

bool Space::operator==(const Space& other) const {
  if (!(sort_ == other.sort_)) return false;
  if (algebra_ == other.algebra_) return true;
  const auto& a = *algebra_;
  const auto& b = *other.algebra_;
  if (a.size() != b.size() || !a.signature().same_language(b.signature())) return false;
  for (std::size_t op = 0; op < a.signature().op_count(); ++op) {
    if (a.table(op) != b.table(op)) return false;
  }
  return true;
}

std::string format_tuple(std::span<const Element> point) {
  std::ostringstream out;
  if (point.size() == 1) {
    out << point[0];
    return out.str();
  }
  out << '(';
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out << ',';
    out << point[i];
  }
  out << ')';
  return out.str();
}

PointSet PointSet::empty(const Space& space) {
  return PointSet(space, boost::dynamic_bitset<>(space.point_count()));
}

PointSet PointSet::full(const Space& space) {
  boost::dynamic_bitset<> bits(space.point_count());
  bits.set();
  return PointSet(space, std::move(bits));
}

PointSet PointSet::from_indices(const Space& space, std::span<const PointIndex> indices) {
  auto out = empty(space);
  for (auto i : indices) {
    if (i >= space.point_count()) throw SortError("point index outside the space");
    out.insert(i);
  }
  return out;
}

void PointSet::require_same_space(const PointSet& other) const {
  if (!(space_ == other.space_)) {
    throw SortError("point sets over different spaces: {" + space_.sort().to_string() + "} over '" +
                    space_.h().name() + "' vs {" + other.space_.sort().to_string() + "} over '" +
                    other.space_.h().name() + "'");
  }
}

bool PointSet::subset_of(const PointSet& other) const {
  require_same_space(other);
  return bits_.is_subset_of(other.bits_);
}

std::vector<PointIndex> PointSet::indices() const {
  std::vector<PointIndex> out;
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) out.push_back(i);
  return out;
}

std::string PointSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto i : indices()) {
    if (!first) out << ", ";
    out << format_tuple(space_.decode(i));
    first = false;
  }
  out << '}';
  return out.str();
}

std::string PointSet::to_hex() const {
  static const char digits[] = "0123456789abcdef";
  const std::size_t n = bits_.size();
  const std::size_t count = (n + 3) / 4;
  std::string out(count, '0');
  for (std::size_t d = 0; d < count; ++d) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t bit = 4 * d + b;
      if (bit < n && bits_.test(bit)) v |= 1u << b;
    }
    out[count - 1 - d] = digits[v];
  }
  return out;
}

PointSet PointSet::operator|(const PointSet& other) const {
  require_same_space(other);
  return PointSet(space_, bits_ | other.bits_);
}

PointSet PointSet::operator&(const PointSet& other) const {
  require_same_space(other);
  return PointSet(space_, bits_ & other.bits_);
}

PointSet PointSet::operator~() const { return PointSet(space_, ~bits_); }

bool PointSet::operator==(const PointSet& other) const {
  require_same_space(other);
  return bits_ == other.bits_;
}

PointSet set_union(const PointSet& a, const PointSet& b) { return a | b; }
PointSet set_intersection(const PointSet& a, const PointSet& b) { return a & b; }
PointSet set_complement(const PointSet& a) { return ~a; }

Element eval_point(const FiniteAlgebra& h, const Term& term, std::span<const Element> point) {
  if (term.is_variable()) {
    if (term.var_index() >= point.size()) throw SortError("term variable outside the point's sort");
    return point[term.var_index()];
  }
  const auto children = term.children();
  Element args[8];
  std::vector<Element> many;
  std::span<Element> view;
  if (children.size() <= 8) {
    view = std::span<Element>(args, children.size());
  } else {
    many.resize(children.size());
    view = many;
  }
  for (std::size_t i = 0; i < children.size(); ++i) view[i] = eval_point(h, children[i], point);
  return h.apply(term.op(), view);
}

std::vector<Element> eval_everywhere(const Space& space, const Term& term) {
  const std::uint64_t n = space.point_count();
  std::vector<Element> out(n);
  if (term.is_variable()) {
    const std::size_t var = term.var_index();
    if (var >= space.sort().size()) throw SortError("term variable outside the space's sort");
    for (PointIndex p = 0; p < n; ++p) out[p] = space.coordinate(p, var);
    return out;
  }
  const auto& h = space.h();
  const auto children = term.children();
  if (children.empty()) {
    std::fill(out.begin(), out.end(), h.constant(term.op()));
    return out;
  }
  std::vector<std::vector<Element>> vals;
  for (const auto& c : children) vals.push_back(eval_everywhere(space, c));
  const auto& table = h.table(term.op());
  const std::size_t m = h.size();
  for (PointIndex p = 0; p < n; ++p) {
    std::size_t idx = 0;
    for (const auto& v : vals) idx = idx * m + v[p];
    out[p] = table[idx];
  }
  return out;
}

PointSet equality_value(const Space& space, const Term& lhs, const Term& rhs) {
  const auto a = eval_everywhere(space, lhs);
  const auto b = eval_everywhere(space, rhs);
  auto out = PointSet::empty(space);
  for (PointIndex p = 0; p < a.size(); ++p) {
    if (a[p] == b[p]) out.insert(p);
  }
  return out;
}

PointSet exists_x(const PointSet& a, std::size_t var) {
  const auto& space = a.space();
  if (var >= space.sort().size()) throw SortError("quantified variable outside the sort");
  const std::uint64_t stride = space.stride(var);
  const std::uint64_t m = space.h().size();
  const std::uint64_t block = stride * m;
  auto out = PointSet::empty(space);
  for (std::uint64_t outer = 0; outer < space.point_count(); outer += block) {
    for (std::uint64_t inner = 0; inner < stride; ++inner) {
      const std::uint64_t base = outer + inner;
      bool any = false;
      for (std::uint64_t k = 0; k < m && !any; ++k) any = a.contains(base + k * stride);
      if (!any) continue;
      for (std::uint64_t k = 0; k < m; ++k) out.insert(base + k * stride);
    }
  }
  return out;
}

PointSet exists_x(const PointSet& a, std::string_view var) { return exists_x(a, a.space().var_index(var)); }

PointSet forall_x(const PointSet& a, std::size_t var) { return ~exists_x(~a, var); }

PointSet forall_x(const PointSet& a, std::string_view var) { return forall_x(a, a.space().var_index(var)); }

PointSet sstar_pointset(const Substitution& s, const PointSet& a) {
  const auto& source = a.space();
  if (!(source.sort() == s.source())) {
    throw SortError("set over {" + source.sort().to_string() + "} but substitution source is {" +
                    s.source().to_string() + "}");
  }
  Space target(source.algebra(), s.target());
  std::vector<std::vector<Element>> coords;
  for (std::size_t x = 0; x < s.source().size(); ++x) coords.push_back(eval_everywhere(target, s.image(x)));
  auto out = PointSet::empty(target);
  for (PointIndex p = 0; p < target.point_count(); ++p) {
    PointIndex idx = 0;
    for (std::size_t x = 0; x < coords.size(); ++x) idx += source.stride(x) * coords[x][p];
    if (a.contains(idx)) out.insert(p);
  }
  return out;
}

}  // namespace logeo
