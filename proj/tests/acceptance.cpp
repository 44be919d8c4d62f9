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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "logeo/axioms.hpp"
#include "logeo/geometry.hpp"
#include "logeo/typesys.hpp"
#include "logeo/zline.hpp"
#include "support.hpp"

using namespace logeo;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failures without stopping at the first one.
class Tally {
 public:
  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " violation(s), first: " + first_};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::size_t count_classes(const std::vector<PointIndex>& labels) {
  return std::set<PointIndex>(labels.begin(), labels.end()).size();
}

std::vector<PointIndex> orbit_labels(const AlgebraPtr& h, const VarSort& sort) {
  return testing::brute_orbits(Space(h, sort), automorphisms(*h).elements());
}

Outcome exponent_census() {
  Tally t;
  struct Case {
    unsigned p, m, n;
    std::size_t subspaces;
  };
  for (Case c : {Case{2, 2, 2, 5}, Case{2, 3, 2, 5}, Case{3, 2, 1, 2}, Case{2, 4, 2, 5}}) {
    auto start = std::chrono::steady_clock::now();
    ExponentCensus census = exponent_p_census(c.p, c.m, c.n);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream id;
    id << "(" << c.p << "," << c.m << "," << c.n << ")";
    AlgebraPtr h = std::make_shared<const FiniteAlgebra>(elementary_abelian(c.p, c.m));
    std::vector<std::string> names;
    for (unsigned i = 0; i < c.n; ++i) names.push_back("x" + std::to_string(i + 1));
    std::size_t orbits = count_classes(orbit_labels(h, VarSort(names)));
    t.expect(orbits == c.subspaces, id.str() + " brute orbit count " + std::to_string(orbits));
    t.expect(census.orbit_count == c.subspaces, id.str() + " census orbit count");
    t.expect(census.subgroup_count == c.subspaces, id.str() + " subspace count");
    t.expect(census.every_value_is_one_orbit, id.str() + " value is not one orbit");
    t.expect(census.ok(), id.str() + " census not ok");
    t.expect(secs < 10.0, id.str() + " over 10 s");
  }
  return t.outcome("orbit counts 5, 5, 2, 5");
}

Outcome cyclic30_census() {
  Tally t;
  AlgebraPtr h = resolve_algebra("z30");
  VarSort x{"x"};
  OrderCensus census = order_formula_census(h, x);
  TypeCensus types = type_census(h, x, false);
  auto orbits = orbit_labels(h, x);
  t.expect(types.partition.class_count() == 8, "type classes " + std::to_string(types.partition.class_count()));
  t.expect(count_classes(orbits) == 8, "orbit count");
  t.expect(census.formula_count == 8, "order formula count");
  Space s(h, x);
  for (const auto& row : census.rows) {
    PointSet v = value(row.formula, h);
    std::set<PointIndex> labels;
    for (auto i : v.indices()) labels.insert(orbits[i]);
    bool whole = labels.size() == 1;
    if (whole) {
      for (PointIndex i = 0; i < s.point_count(); ++i) whole = whole && (orbits[i] == *labels.begin()) == v.contains(i);
    }
    t.expect(whole, "order " + std::to_string(row.orders[0]) + " value is not one orbit");
    if (row.orders[0] == 30) t.expect(v.count() == 8, "generator orbit size");
  }
  t.expect(census.ok(), "census not ok");
  return t.outcome("8 types, each order formula one orbit, 8 generators");
}

Outcome finite_perfectness() {
  Tally t;
  std::size_t checked = 0;
  for (const auto& h : menu_groups(8)) {
    for (const VarSort& sort : {VarSort{"x"}, VarSort{"x", "y"}}) {
      RhoResult rho = rho_partition(h, sort);
      std::string id = h->name() + " " + sort.to_string();
      t.expect(rho.stabilized, id + " did not stabilize: " + rho.note);
      t.expect(testing::same_equivalence(rho.partition.ids(), orbit_labels(h, sort)), id + " rho != orbits");
      ++checked;
    }
  }
  return t.outcome(std::to_string(checked) + " (algebra, sort) cases");
}

Outcome non_homogeneity() {
  Tally t;
  AlgebraPtr h = resolve_algebra("z2xz4");
  VarSort x{"x"};
  Partition tau = tau_partition(h, x);
  Partition rho = rho_partition(h, x).partition;
  // (1,0) = 4, (0,2) = 2, (1,2) = 6.
  t.expect(tau.class_of(2) == tau.class_of(4) && tau.class_of(4) == tau.class_of(6), "order-2 tau class");
  t.expect(tau.class_set(tau.class_of(2)).count() == 3, "order-2 tau class size");
  t.expect(rho.class_set(rho.class_of(2)).count() == 1, "(0,2) not alone under rho");
  t.expect(rho.class_of(4) == rho.class_of(6), "(1,0), (1,2) split");
  t.expect(!is_homogeneous(h, x), "reported homogeneous");
  t.expect(is_logically_perfect(h, x), "reported not perfect");
  std::vector<Element> a{2}, b{4};
  auto u = separating_formula(h, x, a, b);
  t.expect(u.has_value(), "no separating formula");
  if (u) {
    PointSet squares = PointSet::empty(Space(h, x));
    for (Element y = 0; y < h->size(); ++y) squares.insert(h->binary(0, y, y));
    t.expect(value(*u, h) == squares, "separator value " + value(*u, h).to_string() + " vs squares " + squares.to_string());
    return t.outcome("separator " + print_formula(*u, h->signature()));
  }
  return t.outcome("");
}

Outcome axiom_suite() {
  Tally t;
  std::size_t instances = 0;
  struct Case {
    const char* name;
    VarSort sort;
  };
  for (const Case& c : {Case{"z4", {"x", "y"}}, Case{"s3", {"x", "y"}}, Case{"z2xz2", {"x", "y", "z"}},
                        Case{"d4", {"x", "y"}}}) {
    AxiomReport report = run_axiom_suite(resolve_algebra(c.name), c.sort, 500, 2024);
    for (const auto& r : report.results) {
      instances += r.instances;
      t.expect(r.instances == 500, std::string(c.name) + " " + r.name + " ran " + std::to_string(r.instances));
      t.expect(r.violations == 0, std::string(c.name) + " " + r.name + ": " + r.first_violation);
    }
  }
  return t.outcome(std::to_string(instances) + " instances, zero violations");
}

Outcome isotypy_vs_isomorphism() {
  Tally t;
  auto menu = menu_groups(6);
  std::size_t pairs = 0;
  for (const auto& h1 : menu) {
    for (const auto& h2 : menu) {
      bool iso = isomorphic(*h1, *h2).has_value();
      for (const VarSort& sort : {VarSort{"x"}, VarSort{"x", "y"}}) {
        IsotypyResult r = isotyped(h1, h2, sort);
        std::string id = h1->name() + " vs " + h2->name() + " " + sort.to_string();
        t.expect(r.isotyped == iso, id);
        if (!r.isotyped && r.witness) {
          bool in1 = in_theory(*r.witness, h1), in2 = in_theory(*r.witness, h2);
          t.expect(in1 != in2, id + " witness does not separate");
        }
        ++pairs;
      }
    }
  }
  AlgebraPtr z4 = resolve_algebra("z4"), k4 = resolve_algebra("z2xz2");
  IsotypyResult r = isotyped(z4, k4, VarSort{"x"});
  t.expect(r.witness.has_value(), "no Z4 vs Z2xZ2 witness");
  if (r.witness) {
    t.expect(r.witness->is_closed(), "witness not closed");
    PointSet v1 = value(*r.witness, z4), v2 = value(*r.witness, k4);
    t.expect((v1.is_full() && v2.is_empty()) || (v1.is_empty() && v2.is_full()), "witness values not full/empty");
  }
  return t.outcome(std::to_string(pairs) + " ordered pairs");
}

Outcome galois_laws() {
  Tally t;
  std::mt19937 rng(77);
  VarSort xy{"x", "y"};
  const char* names[] = {"z4", "s3", "z2xz2", "z2xz4"};
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraPtr h = resolve_algebra(names[trial % 4]);
    const Signature& sig = h->signature();
    Space s(h, xy);
    std::vector<std::pair<Term, Term>> pairs;
    std::vector<Formula> formulas;
    for (int k = 0; k < 4; ++k) {
      pairs.emplace_back(testing::random_term(sig, 2, rng, 3), testing::random_term(sig, 2, rng, 3));
      formulas.push_back(testing::random_formula(sig, xy, rng, 4));
    }
    EquationSystem e_small{xy, {pairs.begin(), pairs.begin() + 2}}, e_big{xy, pairs};
    FormulaSystem f_small{xy, {formulas.begin(), formulas.begin() + 2}}, f_big{xy, formulas};
    PointSet a_small = algebraic_set(e_small, h), a_big = algebraic_set(e_big, h);
    PointSet b_small = elementary_set(f_small, h), b_big = elementary_set(f_big, h);
    std::string id = "trial " + std::to_string(trial);
    // Definitions by brute force.
    for (PointIndex i = 0; i < s.point_count(); ++i) {
      auto p = s.decode(i);
      bool in_a = true, in_b = true;
      for (const auto& [l, r] : pairs) in_a = in_a && eval_point(*h, l, p) == eval_point(*h, r, p);
      for (const auto& f : formulas) in_b = in_b && satisfies(f, *h, p);
      t.expect(a_big.contains(i) == in_a, id + " algebraic set");
      t.expect(b_big.contains(i) == in_b, id + " elementary set");
    }
    // Antitone in T.
    t.expect(a_big.subset_of(a_small), id + " equational antitone");
    t.expect(b_big.subset_of(b_small), id + " logical antitone");
    // Antitone in A on the candidate lists, and A within its closure.
    auto pairs_big = equational_annihilator(a_big, pairs).pairs.size();
    auto pairs_small = equational_annihilator(a_small, pairs).pairs.size();
    t.expect(pairs_big >= pairs_small, id + " annihilator antitone");
    t.expect(a_big.subset_of(algebraic_set(equational_annihilator(a_big, pairs), h)), id + " A in A''");
    t.expect(b_big.subset_of(elementary_set(logical_annihilator(b_big, formulas), h)), id + " B in B^LL");
    // Closure monotone on points: A subset B implies cl(A) subset cl(B).
    auto closure = [&](const PointSet& a) {
      PointSet out = PointSet::empty(s);
      for (auto i : a.indices()) out = out | point_closure(s.decode(i), h, xy);
      return out;
    };
    PointSet c_small = closure(b_small), c_big = closure(b_big);
    t.expect(c_big.subset_of(c_small), id + " closure monotone");
    t.expect(closure(c_small) == c_small, id + " closure idempotent");
    t.expect(c_big == b_big, id + " elementary set not closed");
  }
  std::size_t classes = 0;
  for (const auto& h : menu_groups(8)) {
    for (const VarSort& sort : {VarSort{"x"}, VarSort{"x", "y"}}) {
      Partition rho = rho_partition(h, sort).partition;
      auto orbits = orbit_labels(h, sort);
      for (std::uint32_t c = 0; c < rho.class_count(); ++c) {
        PointSet cls = rho.class_set(c);
        t.expect(is_elementary(cls, rho).elementary, h->name() + " rho class not elementary");
        // Brute force: the class is a union of orbits.
        for (PointIndex i = 0; i < orbits.size(); ++i)
          for (PointIndex j = 0; j < orbits.size(); ++j)
            if (orbits[i] == orbits[j]) t.expect(cls.contains(i) == cls.contains(j), h->name() + " class cuts an orbit");
        ++classes;
      }
    }
  }
  return t.outcome("200 systems, " + std::to_string(classes) + " rho classes");
}

Outcome quasiidentities() {
  Tally t;
  std::mt19937 rng(13);
  std::size_t checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraPtr h = resolve_algebra(trial % 2 ? "z4" : "z2");
    VarSort sort = trial % 4 < 2 ? VarSort{"x"} : VarSort{"x", "y"};
    const Signature& sig = h->signature();
    Space s(h, sort);
    EquationSystem sys{sort, {}};
    std::size_t size = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    for (std::size_t k = 0; k < size; ++k)
      sys.pairs.emplace_back(testing::random_term(sig, sort.size(), rng, 3), testing::random_term(sig, sort.size(), rng, 3));
    std::vector<std::vector<Element>> solutions;
    for (PointIndex i = 0; i < s.point_count(); ++i) {
      auto p = s.decode(i);
      bool ok = true;
      for (const auto& [l, r] : sys.pairs) ok = ok && eval_point(*h, l, p) == eval_point(*h, r, p);
      if (ok) solutions.push_back(p);
    }
    for (int target = 0; target < 100; ++target) {
      Term l = testing::random_term(sig, sort.size(), rng, 3), r = testing::random_term(sig, sort.size(), rng, 3);
      bool expected = true;
      for (const auto& p : solutions) expected = expected && eval_point(*h, l, p) == eval_point(*h, r, p);
      t.expect(in_equational_closure(sys, l, r, h) == expected, "trial " + std::to_string(trial));
      ++checks;
    }
  }
  return t.outcome(std::to_string(checks) + " queries");
}

Outcome zline_box() {
  using namespace logeo::zline;
  Tally t;
  std::vector<ZPoint> tuples;
  for (std::size_t n = 1; n <= 3; ++n) {
    ZPoint p(n, -5);
    while (true) {
      tuples.push_back(p);
      std::size_t k = 0;
      while (k < n && ++p[k] > 5) p[k++] = -5;
      if (k == n) break;
    }
  }
  std::vector<LinearExistsFormula> generated;
  std::size_t pairs = 0;
  for (const auto& a : tuples) {
    ZPoint neg = a;
    for (auto& v : neg) v = -v;
    for (const auto& b : tuples) {
      if (b.size() != a.size()) continue;
      IsotypyVerdict v = z_isotyped(a, b);
      ++pairs;
      t.expect(v.isotyped == (b == a || b == neg), format_zpoint(a) + " vs " + format_zpoint(b));
      if (!v.isotyped) {
        bool at_a = v.witness && eval_exists_linear(*v.witness, a);
        bool at_b = v.witness && eval_exists_linear(*v.witness, b);
        t.expect(v.witness && at_a != at_b, format_zpoint(a) + " vs " + format_zpoint(b) + " witness");
      }
    }
    generated.push_back(build_test_formula(a));
  }
  for (const auto& f : generated) {
    for (const auto& a : tuples) {
      if (a.size() != f.coefficients.size()) continue;
      ZPoint neg = a;
      for (auto& v : neg) v = -v;
      t.expect(eval_exists_linear(f, a) == eval_exists_linear(f, neg), "a generated formula separates a from -a");
    }
  }
  return t.outcome(std::to_string(pairs) + " pairs");
}

Outcome pebble_gap() {
  Tally t;
  AlgebraPtr h = resolve_algebra("z2xz4");
  VarSort x{"x"};
  Partition pebble = pebble_partition(h, x, 1);
  Partition rho = rho_partition(h, x).partition;
  t.expect(pebble.class_of(2) == pebble.class_of(4) && pebble.class_of(4) == pebble.class_of(6),
           "pebbles split the order-2 points");
  t.expect(rho.class_of(2) != rho.class_of(4) && rho.class_of(2) != rho.class_of(6), "rho keeps (0,2) with the others");
  return t.outcome("pebble classes " + std::to_string(pebble.class_count()) + ", rho classes " +
                   std::to_string(rho.class_count()));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exponent-p census", 40, exponent_census},
      {2, "distinct-prime cyclic census", 5, cyclic30_census},
      {3, "finite perfectness", 60, finite_perfectness},
      {4, "non-homogeneity witness", 5, non_homogeneity},
      {5, "axiom suite", 120, axiom_suite},
      {6, "isotypy vs isomorphism", 60, isotypy_vs_isomorphism},
      {7, "Galois laws", 120, galois_laws},
      {8, "quasiidentity oracle", 30, quasiidentities},
      {9, "zline box", 30, zline_box},
      {10, "pebble vs full type", 5, pebble_gap},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit)) + " s limit)";
    }
    failed += !o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.ok ? "PASS" : "FAIL") << " (" << timing
              << ") " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
