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

#ifndef LOGEO_TESTS_SUPPORT_HPP
#define LOGEO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "logeo/algebra.hpp"
#include "logeo/algebra_io.hpp"
#include "logeo/formula.hpp"
#include "logeo/space.hpp"

namespace testing {

inline logeo::AlgebraPtr share(logeo::FiniteAlgebra h) {
  return std::make_shared<const logeo::FiniteAlgebra>(std::move(h));
}

inline std::string data(const std::string& name) { return std::string(LOGEO_DATA_DIR) + "/" + name; }

/// Every permutation of the carrier that preserves every table.
inline std::vector<logeo::Permutation> brute_automorphisms(const logeo::FiniteAlgebra& h) {
  std::vector<logeo::Permutation> out;
  logeo::Permutation perm(h.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<logeo::Element>(i);
  do {
    if (logeo::is_homomorphism(h, h, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Orbit label per point: the least index reachable under the given maps.
inline std::vector<logeo::PointIndex> brute_orbits(const logeo::Space& space,
                                                   const std::vector<logeo::Permutation>& perms) {
  std::vector<logeo::PointIndex> label(space.point_count());
  for (logeo::PointIndex i = 0; i < space.point_count(); ++i) {
    auto point = space.decode(i);
    logeo::PointIndex best = i;
    for (const auto& p : perms) {
      std::vector<logeo::Element> image;
      for (auto a : point) image.push_back(p[a]);
      best = std::min(best, space.index(image));
    }
    label[i] = best;
  }
  return label;
}

/// Two labelings describe the same equivalence.
template <typename A, typename B>
bool same_equivalence(const std::vector<A>& a, const std::vector<B>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

/// Random group terms over the first `vars` variables, depth <= `depth`.
inline logeo::Term random_term(const logeo::Signature& sig, std::size_t vars, std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 1 : 4);
  switch (pick(rng)) {
    case 0: return logeo::Term::variable(std::uniform_int_distribution<std::size_t>(0, vars - 1)(rng));
    case 1: return logeo::Term::apply(*sig.find("e"));
    case 2: return logeo::Term::apply(*sig.find("inv"), {random_term(sig, vars, rng, depth - 1)});
    default:
      return logeo::Term::apply(*sig.find("*"), {random_term(sig, vars, rng, depth - 1), random_term(sig, vars, rng, depth - 1)});
  }
}

inline logeo::Formula random_formula(const logeo::Signature& sig, const logeo::VarSort& sort, std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 0 : 7);
  auto sub = [&] { return random_formula(sig, sort, rng, depth - 1); };
  auto var = [&] { return std::uniform_int_distribution<std::size_t>(0, sort.size() - 1)(rng); };
  switch (pick(rng)) {
    case 0:
    case 1:
      return logeo::Formula::equality(sort, random_term(sig, sort.size(), rng, 3), random_term(sig, sort.size(), rng, 3));
    case 2: return logeo::Formula::negation(sub());
    case 3: return logeo::Formula::conjunction(sub(), sub());
    case 4: return logeo::Formula::disjunction(sub(), sub());
    case 5: return logeo::Formula::exists(var(), sub());
    case 6: return logeo::Formula::forall(var(), sub());
    default: {
      std::vector<logeo::Term> images;
      for (std::size_t i = 0; i < sort.size(); ++i) images.push_back(random_term(sig, sort.size(), rng, 2));
      return logeo::Formula::substitution(logeo::Substitution(sort, sort, images), sub());
    }
  }
}


}  // namespace testing

#endif  // LOGEO_TESTS_SUPPORT_HPP
