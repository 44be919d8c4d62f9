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

#ifndef LOGEO_ALGEBRA_HPP
#define LOGEO_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logeo/guards.hpp"
#include "logeo/signature.hpp"

namespace logeo {

using Element = std::uint32_t;

/// A finite algebra on the carrier {0, ..., m-1}. Tables are row-major in
/// argument order; a nullary table holds the single constant.
class FiniteAlgebra {
 public:
  /// Validates ranges, table sizes and the identities the variety demands.
  FiniteAlgebra(std::string name, Signature signature, std::size_t carrier,
                std::vector<std::vector<Element>> tables);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return signature_; }
  std::size_t size() const { return carrier_; }
  const std::vector<Element>& table(std::size_t op) const { return tables_.at(op); }

  Element apply(std::size_t op, std::span<const Element> args) const;
  Element constant(std::size_t op) const { return tables_[op][0]; }
  Element unary(std::size_t op, Element a) const { return tables_[op][a]; }
  Element binary(std::size_t op, Element a, Element b) const {
    return tables_[op][static_cast<std::size_t>(a) * carrier_ + b];
  }

 private:
  std::string name_;
  Signature signature_;
  std::size_t carrier_;
  std::vector<std::vector<Element>> tables_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

FiniteAlgebra cyclic(std::size_t n);
/// Carrier encoding (a, b) -> a * |second| + b.
FiniteAlgebra direct_product(const FiniteAlgebra& first, const FiniteAlgebra& second);
/// (Z/p)^m with exponent-p variety tag. Throws AlgebraError if p is not prime.
FiniteAlgebra elementary_abelian(unsigned p, unsigned m);
/// Dihedral group of order 2n: rotations r^k -> k, reflections s r^k -> n + k.
FiniteAlgebra dihedral(std::size_t n);
/// Symmetric group on three letters (dihedral of order 6 under another name).
FiniteAlgebra symmetric3();
/// Quaternion group {±1, ±i, ±j, ±k} encoded 0..7 as 1,-1,i,-i,j,-j,k,-k.
FiniteAlgebra quaternion();

bool is_prime(std::uint64_t n);

/// Least subset containing the generators and all constants, closed under
/// every operation. Sorted ascending.
std::vector<Element> subalgebra_generate(const FiniteAlgebra& h,
                                         std::span<const Element> generators);

/// Breadth-first closure record. Round 1 holds the generators and constants;
/// round r+1 holds elements first produced from arguments of rounds <= r.
struct ClosureTrace {
  struct Step {
    Element element;
    std::size_t round;
    /// Exactly one of: generator index, or an op applied to earlier steps.
    std::optional<std::size_t> generator;
    std::size_t op = 0;
    std::vector<std::size_t> args;  // indices into steps
  };
  std::vector<Step> steps;          // one per distinct element, discovery order
  std::vector<std::size_t> step_of;  // element -> step index, or npos
  std::size_t rounds = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

ClosureTrace closure_trace(const FiniteAlgebra& h, std::span<const Element> generators);

/// Generates the subalgebra of h1 x h2 from the pairs and the paired
/// constants; true iff it is the graph of a bijection between the two
/// generated subalgebras.
bool graph_is_isomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                          std::span<const std::pair<Element, Element>> pairs);

using Permutation = std::vector<Element>;

/// The full automorphism group as an explicit list; identity first.
class AutGroup {
 public:
  explicit AutGroup(std::vector<Permutation> perms) : perms_(std::move(perms)) {}
  const std::vector<Permutation>& elements() const { return perms_; }
  std::size_t order() const { return perms_.size(); }

 private:
  std::vector<Permutation> perms_;
};

AutGroup automorphisms(const FiniteAlgebra& h, const Guards& guards = Guards::defaults());

/// Calls `visit` for each isomorphism h1 -> h2 until it returns false.
void for_each_isomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                          const std::function<bool(const Permutation&)>& visit,
                          const Guards& guards = Guards::defaults());

std::optional<Permutation> isomorphic(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                      const Guards& guards = Guards::defaults());

bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to,
                     std::span<const Element> map);

}  // namespace logeo

#endif  // LOGEO_ALGEBRA_HPP
