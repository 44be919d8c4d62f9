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

#include <algorithm>
#include <numeric>
#include <set>

#include "logeo/error.hpp"
#include "logeo/typesys.hpp"

namespace logeo {

namespace {

using Vec = std::vector<unsigned>;

// Vectors of (Z/p)^n indexed little-endian in base p.
Vec vec_of(std::size_t index, unsigned p, unsigned n) {
  Vec v(n);
  for (unsigned i = 0; i < n; ++i, index /= p) v[i] = static_cast<unsigned>(index % p);
  return v;
}

std::size_t index_of(const Vec& v, unsigned p) {
  std::size_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * p + v[i];
  return index;
}

struct Subspace {
  std::vector<bool> members;
  std::vector<Vec> basis;
};

std::vector<bool> span(const std::vector<bool>& members, const Vec& v, unsigned p, unsigned n) {
  std::vector<bool> out = members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i]) continue;
    Vec w = vec_of(i, p, n);
    for (unsigned k = 1; k < p; ++k) {
      for (unsigned c = 0; c < n; ++c) w[c] = (w[c] + v[c]) % p;
      out[index_of(w, p)] = true;
    }
  }
  return out;
}

std::vector<Subspace> all_subspaces(unsigned p, unsigned n) {
  std::size_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= p;
  std::vector<Subspace> out;
  std::set<std::vector<bool>> seen;
  std::vector<bool> zero(size, false);
  zero[0] = true;
  out.push_back({zero, {}});
  seen.insert(zero);
  for (std::size_t at = 0; at < out.size(); ++at) {
    for (std::size_t v = 1; v < size; ++v) {
      if (out[at].members[v]) continue;
      Vec vec = vec_of(v, p, n);
      auto grown = span(out[at].members, vec, p, n);
      if (!seen.insert(grown).second) continue;
      auto basis = out[at].basis;
      basis.push_back(vec);
      out.push_back({std::move(grown), std::move(basis)});
    }
  }
  return out;
}

// x_1^{c_1} * ... * x_n^{c_n}, or e for the zero vector.
Term monomial(const Signature& sig, const Vec& c) {
  auto g = *sig.group_ops();
  std::optional<Term> acc;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Term t = power_term(sig, Term::variable(i), c[i]);
    acc = acc ? Term::apply(g.mul, {*acc, t}) : t;
  }
  return acc ? *acc : Term::apply(g.unit);
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

VarSort numbered_sort(unsigned n) {
  if (n == 1) return VarSort{"x"};
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarSort(names);
}

bool is_one_orbit(const PointSet& value, const Partition& orbits) {
  if (value.is_empty()) return false;
  auto first = value.indices().front();
  return value == orbits.class_set(orbits.class_of(first));
}

}  // namespace

ExponentCensus exponent_p_census(unsigned p, unsigned m, unsigned n) {
  if (m < n) throw Error("exponent-p census needs m >= n");
  if (n == 0) throw Error("exponent-p census needs n >= 1");
  auto h = std::make_shared<const FiniteAlgebra>(elementary_abelian(p, m));
  const Signature& sig = h->signature();
  const VarSort sort = numbered_sort(n);
  Partition orbits = orbit_partition(h, sort);
  auto subspaces = all_subspaces(p, n);

  ExponentCensus census;
  census.p = p, census.m = m, census.n = n;
  census.subgroup_count = subspaces.size();
  census.orbit_count = orbits.class_count();
  census.every_value_is_one_orbit = true;
  Space space(h, sort);
  PointSet covered = PointSet::empty(space);
  for (const auto& t : subspaces) {
    std::vector<Formula> parts;
    for (std::size_t v = 1; v < t.members.size(); ++v) {
      Formula eq = Formula::equality(sort, monomial(sig, vec_of(v, p, n)), Term::apply(sig.group_ops()->unit));
      parts.push_back(t.members[v] ? eq : Formula::negation(eq));
    }
    PointSet val = parts.empty() ? PointSet::full(space) : value(Formula::conjunction_of(parts), space);
    ExponentCensus::Row row{t.basis, val.count(), is_one_orbit(val, orbits)};
    if (!val.is_empty()) {
      ++census.realised_kernels;
      census.every_value_is_one_orbit = census.every_value_is_one_orbit && row.single_orbit;
    }
    covered = covered | val;
    census.rows.push_back(std::move(row));
  }
  census.orbits_exhausted = covered.is_full() && census.realised_kernels == census.orbit_count;
  return census;
}

Formula order_formula(const Signature& sig, const VarSort& sort, std::size_t var, std::uint64_t order) {
  auto g = sig.group_ops();
  if (!g) throw AlgebraError("order formulas need a group signature");
  if (order == 0) throw Error("element order must be positive");
  const Term x = Term::variable(var);
  const Term e = Term::apply(g->unit);
  if (order == 1) return Formula::equality(sort, x, e);
  std::vector<Formula> parts{Formula::equality(sort, power_term(sig, x, static_cast<unsigned>(order)), e),
                             Formula::negation(Formula::equality(sort, x, e))};
  for (auto d : divisors(order)) {
    if (d == 1 || d == order) continue;
    parts.push_back(Formula::negation(Formula::equality(sort, power_term(sig, x, static_cast<unsigned>(d)), e)));
  }
  return Formula::conjunction_of(std::move(parts));
}

OrderCensus order_formula_census(const AlgebraPtr& h, const VarSort& sort) {
  auto g = h->signature().group_ops();
  if (!g) throw Error("order census needs a group");
  const std::size_t m = h->size();
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      if (h->binary(g->mul, a, b) != h->binary(g->mul, b, a)) throw Error("order census needs an abelian group");
    }
  }
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % (q * q) == 0) throw Error("order census needs a group of square-free order");
  }
  if (sort.empty()) throw SortError("order census needs a non-empty sort");

  Space space(h, sort);
  Partition orbits = orbit_partition(h, sort);
  const auto divs = divisors(m);
  OrderCensus census;
  census.orbit_count = orbits.class_count();
  census.every_value_is_one_orbit = true;
  PointSet covered = PointSet::empty(space);
  std::vector<std::size_t> idx(sort.size(), 0);
  while (true) {
    std::vector<Formula> parts;
    std::vector<std::uint64_t> orders;
    for (std::size_t k = 0; k < sort.size(); ++k) {
      orders.push_back(divs[idx[k]]);
      parts.push_back(order_formula(h->signature(), sort, k, divs[idx[k]]));
    }
    Formula u = Formula::conjunction_of(parts);
    PointSet val = value(u, space);
    OrderCensus::Row row{orders, u, val.count(), is_one_orbit(val, orbits)};
    census.every_value_is_one_orbit = census.every_value_is_one_orbit && row.single_orbit;
    covered = covered | val;
    census.rows.push_back(std::move(row));
    std::size_t k = sort.size();
    while (k > 0 && ++idx[k - 1] == divs.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  census.formula_count = census.rows.size();
  census.orbits_exhausted = covered.is_full() && census.formula_count == census.orbit_count;
  return census;
}

}  // namespace logeo
