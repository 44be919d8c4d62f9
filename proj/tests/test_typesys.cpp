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

#include <doctest.h>

#include "logeo/error.hpp"
#include "logeo/formula.hpp"
#include "logeo/typesys.hpp"
#include "support.hpp"

using namespace logeo;
using testing::share;

namespace {

std::uint64_t brute_order(const FiniteAlgebra& h, Element a) {
  std::uint64_t k = 1;
  for (Element x = a; x != 0; x = h.binary(0, x, a)) ++k;
  return k;
}

}  // namespace

TEST_CASE("partition labels are canonical") {
  Space s(share(cyclic(4)), VarSort{"x"});
  std::vector<std::uint64_t> labels{5, 5, 2, 9};
  Partition p(s, labels);
  CHECK(p.ids() == std::vector<std::uint32_t>{0, 0, 1, 2});
  CHECK(p.class_count() == 3);
  CHECK(p.classes()[0] == std::vector<PointIndex>{0, 1});
  CHECK(p.class_set(2).to_string() == "{3}");
  std::vector<std::uint64_t> coarse{1, 1, 1, 0};
  Partition q(s, coarse);
  CHECK(p.refines(q));
  CHECK(!q.refines(p));
}

TEST_CASE("tau on one variable is equality of element orders") {
  VarSort x{"x"};
  for (const auto& h : menu_groups(8)) {
    Partition tau = tau_partition(h, x);
    std::vector<std::uint64_t> orders;
    for (Element a = 0; a < h->size(); ++a) {
      orders.push_back(brute_order(*h, a));
      CHECK(element_order(*h, a) == orders.back());
    }
    CHECK(testing::same_equivalence(tau.ids(), orders));
  }
}

TEST_CASE("tau on two variables matches term windows") {
  VarSort xy{"x", "y"};
  for (std::string name : {"z4", "z2xz2", "s3", "z6"}) {
    AlgebraPtr h = resolve_algebra(name);
    CAPTURE(name);
    Space s(h, xy);
    std::vector<KernelWindow> windows;
    for (PointIndex i = 0; i < s.point_count(); ++i) {
      auto p = s.decode(i);
      // Depth rounds + 1 reaches every table equation, so the window decides tau.
      REQUIRE(closure_trace(*h, p).rounds <= 3);
      windows.emplace_back(*h, xy, p, 4, 100000);
    }
    Partition tau = tau_partition(h, xy);
    for (PointIndex i = 0; i < s.point_count(); ++i)
      for (PointIndex j = i + 1; j < s.point_count(); ++j)
        CHECK((tau.class_of(i) == tau.class_of(j)) == windows[i].same_as(windows[j]));
  }
}

TEST_CASE("orbits match brute-force automorphisms") {
  for (const auto& h : menu_groups(8)) {
    CAPTURE(h->name());
    auto perms = testing::brute_automorphisms(*h);
    VarSort sort = h->size() <= 6 ? VarSort{"x", "y"} : VarSort{"x"};
    Space s(h, sort);
    CHECK(testing::same_equivalence(orbit_partition(h, sort).ids(), testing::brute_orbits(s, perms)));
  }
}

TEST_CASE("the orbit, rho, tau chain holds and rho reaches the orbits on small groups") {
  for (const auto& h : menu_groups(8)) {
    CAPTURE(h->name());
    VarSort sort = h->size() <= 4 ? VarSort{"x", "y"} : VarSort{"x"};
    ChainReport chain = chain_check(h, sort);
    CHECK(chain.holds());
    CHECK(chain.orbit_classes >= chain.rho_classes);
    CHECK(chain.rho_classes >= chain.tau_classes);
    RhoResult rho = rho_partition(h, sort);
    CHECK(rho.stabilized);
    CHECK(rho.partition == orbit_partition(h, sort));
    CHECK(is_logically_perfect(h, sort));
  }
}

TEST_CASE("Z2 x Z4 on one variable") {
  AlgebraPtr h = resolve_algebra("z2xz4");
  VarSort x{"x"};
  CHECK(tau_partition(h, x).class_count() == 3);
  CHECK(pebble_partition(h, x, 1).class_count() == 3);
  CHECK_THROWS(pebble_partition(h, x, 2));
  RhoResult rho = rho_partition(h, x);
  CHECK(rho.partition.class_count() == 4);
  CHECK(rho.witness_aux_vars == 1);
  Partition orbits = orbit_partition(h, x);
  CHECK(orbits.class_count() == 4);
  // (0,2) = 2 stands alone; (1,0) = 4 and (1,2) = 6 share a class.
  CHECK(orbits.class_set(orbits.class_of(2)).count() == 1);
  CHECK(orbits.class_of(4) == orbits.class_of(6));
  CHECK(orbits.class_set(orbits.class_of(1)).count() == 4);
  CHECK(!is_homogeneous(h, x));
  CHECK(is_logically_perfect(h, x));
  CHECK(!is_strictly_perfect(h, x));

  std::vector<Element> a{2}, b{4}, c{6};
  auto u = separating_formula(h, x, a, b);
  REQUIRE(u);
  CHECK(satisfies(*u, *h, a));
  CHECK(!satisfies(*u, *h, b));
  CHECK(!separating_formula(h, x, b, c));
}

TEST_CASE("homogeneous groups") {
  for (std::string name : {"z4", "z2xz2", "s3", "q8", "z8"}) {
    CAPTURE(name);
    CHECK(is_homogeneous(resolve_algebra(name), VarSort{"x"}));
  }
  // The central involution shares a tau class with the reflections.
  CHECK(!is_homogeneous(resolve_algebra("d4"), VarSort{"x"}));
  CHECK(is_logically_perfect(resolve_algebra("d4"), VarSort{"x"}));
}

TEST_CASE("type census formulas define their classes") {
  for (std::string name : {"z6", "d4", "z2xz4"}) {
    CAPTURE(name);
    AlgebraPtr h = resolve_algebra(name);
    VarSort x{"x"};
    TypeCensus census = type_census(h, x);
    CHECK(census.stabilized);
    CHECK(census.rows.size() == census.partition.class_count());
    std::uint64_t total = 0;
    for (const auto& row : census.rows) {
      total += row.size;
      REQUIRE(row.defining_formula);
      CHECK(value(*row.defining_formula, h) == census.partition.class_set(row.class_id));
      CHECK(census.partition.class_of(Space(h, x).index(row.representative)) == row.class_id);
    }
    CHECK(total == h->size());
  }
  TypeCensus bare = type_census(resolve_algebra("z30"), VarSort{"x"}, false);
  CHECK(bare.rows.size() == 8);
  CHECK(!bare.rows.front().defining_formula);
}

TEST_CASE("isotypy") {
  auto check_witness = [](const IsotypyResult& r, const AlgebraPtr& h1, const AlgebraPtr& h2) {
    REQUIRE(r.witness);
    CHECK(r.witness->is_closed());
    bool in1 = in_theory(*r.witness, h1), in2 = in_theory(*r.witness, h2);
    CHECK(in1 != in2);
    CHECK(r.witness_holds_in == (in1 ? 1 : 2));
  };
  VarSort x{"x"}, xy{"x", "y"};
  auto z4 = resolve_algebra("z4"), k4 = resolve_algebra("z2xz2");
  IsotypyResult r = isotyped(z4, k4, x);
  CHECK(!r.isotyped);
  check_witness(r, z4, k4);
  auto q8 = resolve_algebra("q8"), d4 = resolve_algebra("d4");
  IsotypyResult qd = isotyped(q8, d4, x);
  CHECK(!qd.isotyped);
  check_witness(qd, q8, d4);
  CHECK(isotyped(resolve_algebra("z6"), resolve_algebra("z2xz3"), xy).isotyped);
  CHECK(isotyped(resolve_algebra("s3"), resolve_algebra("d3"), x).isotyped);
  IsotypyResult sizes = isotyped(resolve_algebra("z3"), z4, x);
  CHECK(!sizes.isotyped);
  check_witness(sizes, resolve_algebra("z3"), z4);
}

TEST_CASE("exponent-p census") {
  ExponentCensus c = exponent_p_census(2, 2, 2);
  CHECK(c.subgroup_count == 5);
  CHECK(c.ok());
  ExponentCensus d = exponent_p_census(3, 2, 1);
  CHECK(d.subgroup_count == 2);
  CHECK(d.ok());
  ExponentCensus e = exponent_p_census(2, 3, 2);
  CHECK(e.ok());
  CHECK_THROWS(exponent_p_census(2, 1, 2));
}

TEST_CASE("order-formula census") {
  auto z30 = resolve_algebra("z30");
  OrderCensus c = order_formula_census(z30, VarSort{"x"});
  CHECK(c.ok());
  CHECK(c.formula_count == 8);
  for (const auto& row : c.rows) {
    std::uint64_t count = 0;
    for (Element a = 0; a < 30; ++a) count += brute_order(*z30, a) == row.orders[0];
    CHECK(row.value_size == count);
  }
  // Two variables: (1,1) and (1,5) have the same orders but x == y separates them.
  OrderCensus pairs = order_formula_census(resolve_algebra("z6"), VarSort{"x", "y"});
  CHECK(!pairs.every_value_is_one_orbit);
  CHECK(!pairs.orbits_exhausted);
  CHECK(pairs.formula_count == 16);
  CHECK(pairs.orbit_count > pairs.formula_count);
  CHECK_THROWS(order_formula_census(resolve_algebra("z4"), VarSort{"x"}));
  CHECK_THROWS(order_formula_census(resolve_algebra("s3"), VarSort{"x"}));
  const Signature& sig = z30->signature();
  CHECK(print_formula(order_formula(sig, VarSort{"x"}, 0, 1), sig) == "x == e");
}
