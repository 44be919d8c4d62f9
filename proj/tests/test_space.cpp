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

#include <random>

#include "logeo/error.hpp"
#include "support.hpp"

using namespace logeo;
using testing::share;

namespace {

PointSet random_set(const Space& space, std::mt19937& rng) {
  PointSet s = PointSet::empty(space);
  std::bernoulli_distribution coin(0.4);
  for (PointIndex i = 0; i < space.point_count(); ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

}  // namespace

TEST_CASE("point encoding is little-endian and round-trips") {
  Space s(share(cyclic(3)), VarSort{"x", "y", "z"});
  CHECK(s.point_count() == 27);
  std::vector<Element> p{2, 0, 1};
  CHECK(s.index(p) == 2 + 0 * 3 + 1 * 9);
  for (PointIndex i = 0; i < s.point_count(); ++i) {
    auto d = s.decode(i);
    CHECK(s.index(d) == i);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(s.coordinate(i, v) == d[v]);
      for (Element a = 0; a < 3; ++a) {
        auto moved = s.decode(s.with_coordinate(i, v, a));
        auto expect = d;
        expect[v] = a;
        CHECK(moved == expect);
      }
    }
  }
  CHECK(s.var_index("y") == 1);
  CHECK_THROWS_AS(s.var_index("w"), SortError);
}

TEST_CASE("point space guard") {
  Guards g;
  g.max_points = 100;
  CHECK_NOTHROW(Space(share(cyclic(4)), VarSort{"x", "y", "z"}, g));
  CHECK_THROWS_AS(Space(share(cyclic(5)), VarSort{"x", "y", "z"}, g), GuardError);
  Space empty_sort(share(cyclic(5)), VarSort{});
  CHECK(empty_sort.point_count() == 1);
}

TEST_CASE("Boolean operations satisfy the algebra laws") {
  std::mt19937 rng(7);
  Space s(share(cyclic(3)), VarSort{"x", "y"});
  for (int trial = 0; trial < 50; ++trial) {
    PointSet a = random_set(s, rng), b = random_set(s, rng), c = random_set(s, rng);
    CHECK(~(a | b) == (~a & ~b));
    CHECK((a & (b | c)) == ((a & b) | (a & c)));
    CHECK((a | ~a).is_full());
    CHECK((a & ~a).is_empty());
    CHECK((a & b).subset_of(a));
    CHECK(a.subset_of(a | b));
    CHECK((a | b).count() + (a & b).count() == a.count() + b.count());
    for (PointIndex i = 0; i < s.point_count(); ++i) {
      CHECK((a | b).contains(i) == (a.contains(i) || b.contains(i)));
      CHECK((~a).contains(i) == !a.contains(i));
    }
  }
  Space other(share(cyclic(3)), VarSort{"x", "z"});
  CHECK_THROWS_AS(PointSet::empty(s) | PointSet::empty(other), SortError);
}

TEST_CASE("quantifiers match brute force along lines") {
  std::mt19937 rng(11);
  Space s(share(cyclic(3)), VarSort{"x", "y"});
  for (int trial = 0; trial < 40; ++trial) {
    PointSet a = random_set(s, rng);
    for (std::size_t v = 0; v < 2; ++v) {
      PointSet e = exists_x(a, v), f = forall_x(a, v);
      for (PointIndex i = 0; i < s.point_count(); ++i) {
        bool any = false, all = true;
        for (Element t = 0; t < 3; ++t) {
          bool in = a.contains(s.with_coordinate(i, v, t));
          any = any || in;
          all = all && in;
        }
        CHECK(e.contains(i) == any);
        CHECK(f.contains(i) == all);
      }
      CHECK(forall_x(a, v) == ~exists_x(~a, v));
      CHECK(exists_x(exists_x(a, v), v) == exists_x(a, v));
      CHECK(a.subset_of(e));
      CHECK(f.subset_of(a));
    }
    CHECK(exists_x(exists_x(a, "x"), "y") == exists_x(exists_x(a, "y"), "x"));
  }
}

TEST_CASE("rendering") {
  Space one(share(cyclic(4)), VarSort{"x"});
  std::vector<PointIndex> idx{0, 2};
  PointSet s = PointSet::from_indices(one, idx);
  CHECK(s.to_string() == "{0, 2}");
  CHECK(s.to_hex() == "5");
  Space two(share(cyclic(4)), VarSort{"x", "y"});
  std::vector<PointIndex> corners{0, 15};
  CHECK(PointSet::from_indices(two, corners).to_hex() == "8001");
  CHECK(PointSet::empty(two).to_string() == "{}");
  std::vector<PointIndex> single{1 + 4 * 2};
  CHECK(PointSet::from_indices(two, single).to_string() == "{(1,2)}");
  Space odd(share(cyclic(5)), VarSort{"x"});
  CHECK(PointSet::full(odd).to_hex() == "1f");
}

TEST_CASE("equality values and substitution pull-back agree with pointwise evaluation") {
  AlgebraPtr h = resolve_algebra("s3");
  const Signature& sig = h->signature();
  VarSort xy{"x", "y"};
  Space s(h, xy);
  Term lhs = parse_term("x*y", sig, xy), rhs = parse_term("y*x", sig, xy);
  PointSet eq = equality_value(s, lhs, rhs);
  auto values = eval_everywhere(s, lhs);
  for (PointIndex i = 0; i < s.point_count(); ++i) {
    auto p = s.decode(i);
    CHECK(values[i] == h->binary(0, p[0], p[1]));
    CHECK(eq.contains(i) == (h->binary(0, p[0], p[1]) == h->binary(0, p[1], p[0])));
  }

  VarSort uvw{"u", "v", "w"};
  Substitution sub(xy, uvw, {parse_term("u*inv(w)", sig, uvw), parse_term("v*v", sig, uvw)});
  Space target(h, uvw);
  PointSet pulled = sstar_pointset(sub, eq);
  CHECK(pulled.space() == target);
  for (PointIndex i = 0; i < target.point_count(); ++i) {
    auto mu = target.decode(i);
    std::vector<Element> composed{eval_point(*h, sub.image(0), mu), eval_point(*h, sub.image(1), mu)};
    CHECK(pulled.contains(i) == eq.contains(composed));
  }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet a = random_set(s, rng), b = random_set(s, rng);
    CHECK(sstar_pointset(sub, a | b) == (sstar_pointset(sub, a) | sstar_pointset(sub, b)));
    CHECK(sstar_pointset(sub, ~a) == ~sstar_pointset(sub, a));
  }
}
