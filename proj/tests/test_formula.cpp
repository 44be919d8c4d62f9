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
#include "logeo/formula.hpp"
#include "support.hpp"

using namespace logeo;
using testing::share;

using testing::random_formula;
using testing::random_term;

TEST_CASE("set evaluation agrees with pointwise satisfaction on random formulas") {
  std::mt19937 rng(2024);
  VarSort xy{"x", "y"};
  for (const char* name : {"z4", "s3", "z2xz2", "q8"}) {
    AlgebraPtr h = resolve_algebra(name);
    Space s(h, xy);
    for (int trial = 0; trial < 60; ++trial) {
      Formula u = random_formula(h->signature(), xy, rng, 5);
      PointSet v = value(u, s);
      for (PointIndex i = 0; i < s.point_count(); ++i) {
        auto p = s.decode(i);
        REQUIRE(v.contains(i) == satisfies(u, *h, p));
        CHECK(lker_contains(p, u, h) == v.contains(i));
      }
    }
  }
}

TEST_CASE("printing then parsing preserves the formula") {
  std::mt19937 rng(99);
  VarSort xy{"x", "y"};
  AlgebraPtr h = resolve_algebra("s3");
  const Signature& sig = h->signature();
  for (int trial = 0; trial < 200; ++trial) {
    Formula u = random_formula(sig, xy, rng, 5);
    std::string text = print_formula(u, sig);
    CAPTURE(text);
    Formula back = parse_formula(text, sig, xy);
    CHECK(print_formula(back, sig) == text);
    CHECK(value(back, h) == value(u, h));
  }
}

TEST_CASE("parser precedence and errors") {
  AlgebraPtr h = resolve_algebra("z4");
  const Signature& sig = h->signature();
  VarSort x{"x"};
  Formula u = parse_formula("x == e | x*x == e & !(x == x)", sig, x);
  CHECK(u.kind() == Formula::Kind::disjunction);
  CHECK(u.right().kind() == Formula::Kind::conjunction);
  Formula imp = parse_formula("x == e -> x == e -> x*x == e", sig, x);
  CHECK(imp.kind() == Formula::Kind::disjunction);
  CHECK(imp.right().kind() == Formula::Kind::disjunction);
  Formula q = parse_formula("E y. y*y == x & y == y", sig, VarSort{"x", "y"});
  CHECK(q.kind() == Formula::Kind::exists);
  CHECK(q.operand().kind() == Formula::Kind::conjunction);
  CHECK_THROWS_AS(parse_formula("E y. y*y == x", sig, x), SortError);
  Formula paren = parse_formula("(x*x) == e", sig, x);
  CHECK(paren.kind() == Formula::Kind::equality);
  Formula ne = parse_formula("x != e", sig, x);
  CHECK(ne.kind() == Formula::Kind::negation);
  Formula sub = parse_formula("subst[y := x*x](y == e)", sig, x);
  CHECK(sub.kind() == Formula::Kind::substitution);
  CHECK(value(sub, h) == value(parse_formula("x*x == e", sig, x), h));
  CHECK_THROWS_AS(parse_formula("x == ", sig, x), ParseError);
  CHECK_THROWS_AS(parse_formula("x = e", sig, x), ParseError);
  CHECK_THROWS_AS(parse_formula("(x == e", sig, x), ParseError);
  CHECK_THROWS_AS(parse_formula("x == e extra", sig, x), ParseError);
  CHECK_THROWS(parse_formula("z == e", sig, x));
  CHECK_THROWS(parse_formula("f(x) == e", sig, x));
}

TEST_CASE("quantifier bookkeeping") {
  AlgebraPtr h = resolve_algebra("z4");
  const Signature& sig = h->signature();
  VarSort xy{"x", "y"};
  Formula u = parse_formula("E y. y*y == x", sig, xy);
  CHECK(u.free_variables() == std::vector<bool>{true, false});
  CHECK(!u.is_closed());
  CHECK(u.substitution_free());
  CHECK(u.depth() == 2);
  CHECK(u.size() == 2);
  Formula closed = parse_formula("A x. E y. y*y == x", sig, xy);
  CHECK(closed.is_closed());
  CHECK(!in_theory(closed, h));
  CHECK(in_theory(parse_formula("A x. A y. x*y == y*x", sig, xy), h));
  CHECK(!in_theory(parse_formula("A x. A y. x*y == y*x", sig, xy), resolve_algebra("s3")));
  CHECK_THROWS_AS(in_theory(u, h), SortError);
  CHECK_THROWS_AS(check_formula(Formula::equality(xy, Term::variable(0), Term::variable(5)), sig), SortError);
}

TEST_CASE("substitution nodes evaluate as pull-backs") {
  std::mt19937 rng(5);
  AlgebraPtr h = resolve_algebra("d4");
  const Signature& sig = h->signature();
  VarSort xy{"x", "y"}, uv{"u", "v"};
  for (int trial = 0; trial < 30; ++trial) {
    Formula inner = random_formula(sig, xy, rng, 4);
    std::vector<Term> images{random_term(sig, 2, rng, 3), random_term(sig, 2, rng, 3)};
    Substitution s(xy, uv, images);
    Formula u = Formula::substitution(s, inner);
    CHECK(u.sort() == uv);
    CHECK(!u.substitution_free());
    CHECK(value(u, h) == sstar_pointset(s, value(inner, h)));
  }
}

TEST_CASE("term enumeration follows the counting recurrence") {
  Signature g = Signature::group();
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    VarSort sort(names);
    std::size_t expected = n + 1;
    for (std::size_t d = 1; d <= 3; ++d) {
      if (d > 1) expected = n + 1 + expected * expected + expected;
      auto terms = enumerate_terms(g, sort, d, 1'000'000);
      CHECK(terms.size() == expected);
      for (const auto& t : terms) CHECK(t.depth() <= d);
      for (std::size_t i = 1; i < terms.size(); ++i) CHECK(!(terms[i] == terms[0]));
    }
  }
  CHECK_THROWS_AS(enumerate_terms(g, VarSort{"x"}, 4, 1000), GuardError);
}

TEST_CASE("kernel windows") {
  AlgebraPtr h = resolve_algebra("z2xz4");
  VarSort x{"x"};
  std::vector<Element> mu{4}, nu{2}, order4{1};
  for (std::size_t d = 1; d <= 3; ++d) {
    KernelWindow a(*h, x, mu, d), b(*h, x, nu, d), c(*h, x, order4, d);
    CHECK(a.same_as(b));
    CHECK(a.equality_count() == a.equalities().size());
    if (d >= 2) CHECK(!a.same_as(c));
    for (auto [i, j] : a.equalities()) CHECK(eval_point(*h, a.terms()[i], mu) == eval_point(*h, a.terms()[j], mu));
  }
  KernelWindow r = kernel_of_point_restricted(*h, x, mu, 2);
  CHECK(r.depth_bound() == 2);
}
