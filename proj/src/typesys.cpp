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

#include "logeo/typesys.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "logeo/error.hpp"
#include "refine.hpp"

namespace logeo {

using detail::ClassIds;
using detail::JointSpace;
using detail::Refinement;

Partition::Partition(Space space, std::span<const std::uint64_t> labels) : space_(std::move(space)) {
  if (labels.size() != space_.point_count()) throw SortError("partition labels do not cover the space");
  ids_ = detail::canonical_ids(labels);
  class_count_ = detail::class_count(ids_);
}

std::vector<std::vector<PointIndex>> Partition::classes() const {
  std::vector<std::vector<PointIndex>> out(class_count_);
  for (PointIndex i = 0; i < ids_.size(); ++i) out[ids_[i]].push_back(i);
  return out;
}

PointSet Partition::class_set(std::uint32_t id) const {
  PointSet out = PointSet::empty(space_);
  for (PointIndex i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) out.insert(i);
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (!(space_ == coarser.space_)) throw SortError("partitions over different spaces");
  std::vector<std::int64_t> image(class_count_, -1);
  for (PointIndex i = 0; i < ids_.size(); ++i) {
    auto& slot = image[ids_[i]];
    if (slot < 0) {
      slot = coarser.ids_[i];
    } else if (slot != coarser.ids_[i]) {
      return false;
    }
  }
  return true;
}

namespace {

Partition make_partition(const Space& space, const ClassIds& ids) {
  std::vector<std::uint64_t> labels(ids.begin(), ids.end());
  return Partition(space, labels);
}

std::vector<Element> lift(std::span<const Element> point, std::size_t aux) {
  std::vector<Element> out(point.begin(), point.end());
  for (std::size_t j = 0; j < aux; ++j) out.push_back(point[0]);
  return out;
}

// The same formula over the prefix sort `x`, when no auxiliary variable occurs.
std::optional<Formula> over_prefix(const Formula& u, const VarSort& x) {
  auto fits = [&](const Term& t) {
    auto top = t.max_variable();
    return !top || *top < x.size();
  };
  switch (u.kind()) {
    case Formula::Kind::equality:
      if (!fits(u.lhs()) || !fits(u.rhs())) return std::nullopt;
      return Formula::equality(x, u.lhs(), u.rhs());
    case Formula::Kind::negation:
      if (auto a = over_prefix(u.operand(), x)) return Formula::negation(*a);
      return std::nullopt;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      auto a = over_prefix(u.left(), x), b = over_prefix(u.right(), x);
      if (!a || !b) return std::nullopt;
      return u.kind() == Formula::Kind::conjunction ? Formula::conjunction(*a, *b) : Formula::disjunction(*a, *b);
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      if (u.variable() >= x.size()) return std::nullopt;
      auto body = over_prefix(u.operand(), x);
      if (!body) return std::nullopt;
      return u.kind() == Formula::Kind::exists ? Formula::exists(u.variable(), *body)
                                               : Formula::forall(u.variable(), *body);
    }
    case Formula::Kind::substitution:
      return std::nullopt;
  }
  return std::nullopt;
}

// Pebble refinement over X plus j auxiliary variables, for growing j, read
// back on X through y_j := x_1.
struct Escalation {
  explicit Escalation(JointSpace b) : base(std::move(b)) {}

  JointSpace base;
  ClassIds projected;
  std::optional<Refinement> refinement;  // the one producing `projected`
  std::size_t witness_aux = 0;
  std::size_t aux_vars = 0;
  bool stabilized = true;
  std::string note;

  std::uint64_t lifted(std::uint64_t g) const {
    auto point = base.decode(g);
    return refinement->space().encode(base.part_of(g), lift(point, witness_aux));
  }

  Formula lower(Formula u) const {
    if (witness_aux == 0) return u;
    if (auto plain = over_prefix(u, base.sort())) return *plain;
    return Formula::substitution(detail::aux_lift(refinement->space().sort(), base.sort()), std::move(u));
  }

  // A point whose class holds points of one algebra only, taken at the
  // earliest refinement round where such a class appears.
  std::optional<std::uint64_t> first_one_sided() const {
    if (base.parts() < 2) return std::nullopt;
    std::vector<std::uint64_t> lifted_points(base.size());
    for (std::uint64_t g = 0; g < base.size(); ++g) lifted_points[g] = lifted(g);
    for (std::size_t r = 0; r < refinement->rounds(); ++r) {
      const ClassIds& ids = refinement->level(r);
      std::unordered_map<std::uint32_t, std::uint8_t> mask;
      for (std::uint64_t g = 0; g < base.size(); ++g) mask[ids[lifted_points[g]]] |= 1u << base.part_of(g);
      for (std::uint64_t g = 0; g < base.size(); ++g) {
        if (mask[ids[lifted_points[g]]] != 3) return g;
      }
    }
    return std::nullopt;
  }
};

Escalation escalate(const std::vector<AlgebraPtr>& algebras, const VarSort& sort, bool stop_when_one_sided) {
  const Guards& guards = Guards::defaults();
  Escalation esc(JointSpace(algebras, sort, guards));
  const Signature& sig = algebras[0]->signature();
  std::size_t max_aux = 0;
  for (const auto& h : algebras) max_aux = std::max(max_aux, h->size());
  if (sort.empty()) max_aux = 0;

  for (std::size_t j = 0;; ++j) {
    if (j > max_aux) {
      esc.stabilized = sort.empty();
      if (!sort.empty()) esc.note = "escalation stopped at the bound of " + std::to_string(max_aux) + " auxiliary variables";
      return esc;
    }
    VarSort extended = sort.extended(detail::aux_names(sort, sig, j));
    std::optional<Refinement> ref;
    try {
      ref.emplace(JointSpace(algebras, extended, guards));
    } catch (const GuardError& e) {
      if (j == 0) throw;
      esc.stabilized = false;
      esc.note = "point guard reached with " + std::to_string(j) + " auxiliary variables: " + e.what();
      return esc;
    }
    esc.aux_vars = j;
    ClassIds ids(esc.base.size());
    for (std::uint64_t g = 0; g < esc.base.size(); ++g) {
      auto point = esc.base.decode(g);
      ids[g] = ref->final_class(ref->space().encode(esc.base.part_of(g), lift(point, j)));
    }
    ids = detail::canonical_ids(std::span<const std::uint32_t>(ids));
    if (esc.refinement && ids == esc.projected) return esc;
    esc.projected = std::move(ids);
    esc.refinement = std::move(ref);
    esc.witness_aux = j;
    if (stop_when_one_sided && esc.first_one_sided()) return esc;
  }
}

AutGroup aut_of(const AlgebraPtr& h) { return automorphisms(*h, Guards::defaults()); }

}  // namespace

Partition tau_partition(const AlgebraPtr& h, const VarSort& sort) {
  JointSpace js({h}, sort, Guards::defaults());
  return make_partition(js.space(0), detail::tau_ids(js));
}

Partition pebble_partition(const AlgebraPtr& h, const VarSort& sort, std::size_t pebbles) {
  if (pebbles != sort.size()) {
    throw Error("pebble count must equal the sort size; enlarge the sort for more pebbles");
  }
  Refinement ref(JointSpace({h}, sort, Guards::defaults()));
  return make_partition(ref.space().space(0), ref.final_ids());
}

RhoResult rho_partition(const AlgebraPtr& h, const VarSort& sort) {
  Escalation esc = escalate({h}, sort, false);
  return RhoResult{make_partition(esc.base.space(0), esc.projected), esc.aux_vars, esc.witness_aux, esc.stabilized,
                   esc.note};
}

Partition orbit_partition(const AlgebraPtr& h, const VarSort& sort, const AutGroup& aut) {
  Space space(h, sort);
  std::vector<std::uint64_t> labels(space.point_count(), space.point_count());
  std::vector<Element> image(sort.size());
  for (PointIndex i = 0; i < space.point_count(); ++i) {
    if (labels[i] != space.point_count()) continue;
    auto point = space.decode(i);
    for (const auto& sigma : aut.elements()) {
      for (std::size_t k = 0; k < point.size(); ++k) image[k] = sigma[point[k]];
      labels[space.index(image)] = i;
    }
  }
  return Partition(space, labels);
}

Partition orbit_partition(const AlgebraPtr& h, const VarSort& sort) { return orbit_partition(h, sort, aut_of(h)); }

ChainReport chain_check(const AlgebraPtr& h, const VarSort& sort) {
  Partition tau = tau_partition(h, sort);
  Partition rho = rho_partition(h, sort).partition;
  Partition orbits = orbit_partition(h, sort);
  ChainReport report;
  report.orbit_in_rho = orbits.refines(rho);
  report.rho_in_tau = rho.refines(tau);
  report.tau_classes = tau.class_count();
  report.rho_classes = rho.class_count();
  report.orbit_classes = orbits.class_count();
  return report;
}

bool is_logically_perfect(const AlgebraPtr& h, const VarSort& sort) {
  return rho_partition(h, sort).partition == orbit_partition(h, sort);
}

bool is_homogeneous(const AlgebraPtr& h, const VarSort& sort) {
  return tau_partition(h, sort) == orbit_partition(h, sort);
}

bool is_strictly_perfect(const AlgebraPtr& h, const VarSort& sort) {
  return pebble_partition(h, sort, sort.size()) == orbit_partition(h, sort);
}

std::optional<Formula> separating_formula(const AlgebraPtr& h, const VarSort& sort, std::span<const Element> a,
                                          std::span<const Element> b) {
  Escalation esc = escalate({h}, sort, false);
  const std::uint64_t ga = esc.base.encode(0, a), gb = esc.base.encode(0, b);
  if (esc.projected[ga] == esc.projected[gb]) return std::nullopt;
  const std::uint64_t q = esc.lifted(gb);
  return esc.lower(esc.refinement->separator(esc.lifted(ga), std::span<const std::uint64_t>(&q, 1)));
}

TypeCensus type_census(const AlgebraPtr& h, const VarSort& sort, bool with_formulas) {
  Escalation esc = escalate({h}, sort, false);
  Partition partition = make_partition(esc.base.space(0), esc.projected);
  std::vector<PointIndex> reps(partition.class_count(), 0);
  std::vector<std::uint64_t> sizes(partition.class_count(), 0);
  for (PointIndex i = partition.ids().size(); i-- > 0;) {
    reps[partition.class_of(i)] = i;
    ++sizes[partition.class_of(i)];
  }
  TypeCensus census{partition, {}, esc.stabilized};
  for (std::uint32_t id = 0; id < reps.size(); ++id) {
    TypeRow row{id, sizes[id], esc.base.decode(reps[id]), std::nullopt};
    if (with_formulas) {
      std::vector<std::uint64_t> others;
      for (std::uint32_t other = 0; other < reps.size(); ++other) {
        if (other != id) others.push_back(esc.lifted(reps[other]));
      }
      row.defining_formula = esc.lower(esc.refinement->separator(esc.lifted(reps[id]), others));
    }
    census.rows.push_back(std::move(row));
  }
  return census;
}

IsotypyResult isotyped(const AlgebraPtr& h1, const AlgebraPtr& h2, const VarSort& sort) {
  if (sort.empty()) throw SortError("isotypy needs a non-empty sort");
  if (!h1->signature().same_language(h2->signature())) throw AlgebraError("algebras over different signatures");
  Escalation esc = escalate({h1, h2}, sort, true);
  IsotypyResult result;
  result.aux_vars = esc.aux_vars;
  result.stabilized = esc.stabilized;
  auto p = esc.first_one_sided();
  if (!p) {
    result.isotyped = true;
    return result;
  }
  const std::size_t part = esc.base.part_of(*p);
  std::vector<std::uint64_t> others;
  const std::size_t other = 1 - part;
  for (std::uint64_t g = esc.base.offset(other); g < esc.base.offset(other + 1); ++g) {
    others.push_back(esc.lifted(g));
  }
  Formula body = esc.lower(esc.refinement->separator(esc.lifted(*p), others));
  for (std::size_t k = sort.size(); k-- > 0;) body = Formula::exists(k, body);
  result.isotyped = false;
  result.witness = std::move(body);
  result.witness_holds_in = static_cast<int>(part) + 1;
  return result;
}

std::uint64_t element_order(const FiniteAlgebra& h, Element a) {
  auto g = h.signature().group_ops();
  if (!g) throw AlgebraError("element order needs a group signature");
  const Element e = h.constant(g->unit);
  Element x = a;
  std::uint64_t k = 1;
  while (x != e) {
    x = h.binary(g->mul, x, a);
    if (++k > h.size()) throw AlgebraError("element has no finite order");
  }
  return k;
}

}  // namespace logeo
