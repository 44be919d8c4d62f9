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

#ifndef LOGEO_AXIOMS_HPP
#define LOGEO_AXIOMS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "logeo/formula.hpp"
#include "logeo/space.hpp"

namespace logeo {

/// Random syntax and point sets for the property suites.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t bound);
  bool coin() { return below(2) == 1; }

  Term term(const Signature& sig, const VarSort& sort, std::size_t max_depth);
  /// Formulas of depth <= max_depth. Substitution nodes draw their inner
  /// sort from `inner_sorts` (ignored when empty).
  Formula formula(const Signature& sig, const VarSort& sort, std::size_t max_depth,
                  const std::vector<VarSort>& inner_sorts = {});
  Substitution substitution(const Signature& sig, const VarSort& source, const VarSort& target,
                            std::size_t max_depth);
  PointSet point_set(const Space& space);
  std::vector<Element> point(const Space& space);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct AxiomResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

struct AxiomReport {
  std::string algebra;
  std::string sort;
  std::vector<AxiomResult> results;
  bool ok() const;
  std::size_t total_violations() const;
};

/// Runs every quantifier, equality and substitution axiom on `samples`
/// random instances each. Substitutions range over `sort` and a second sort
/// of the same size (or one larger, when the point guard allows).
AxiomReport run_axiom_suite(const AlgebraPtr& h, const VarSort& sort, std::size_t samples,
                            std::uint64_t seed);

}  // namespace logeo

#endif  // LOGEO_AXIOMS_HPP
