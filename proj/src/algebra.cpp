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

#include "logeo/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "logeo/error.hpp"

namespace logeo {

namespace {

std::size_t table_size(std::size_t carrier, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) n *= carrier;
  return n;
}

std::string tuple_text(std::initializer_list<Element> xs) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (auto x : xs) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  out << ')';
  return out.str();
}

void check_group_identities(const FiniteAlgebra& h) {
  const auto& sig = h.signature();
  const auto g = *sig.group_ops();
  const std::size_t m = h.size();
  const Element e = h.constant(g.unit);
  auto fail = [&](const std::string& law, std::initializer_list<Element> witness) {
    throw AlgebraError("identity violation in '" + h.name() + "': " + law + " fails at " +
                       tuple_text(witness));
  };
  for (Element x = 0; x < m; ++x) {
    if (h.binary(g.mul, e, x) != x || h.binary(g.mul, x, e) != x) fail("e*x == x == x*e", {x});
    if (h.binary(g.mul, x, h.unary(g.inv, x)) != e || h.binary(g.mul, h.unary(g.inv, x), x) != e) {
      fail("x*inv(x) == e == inv(x)*x", {x});
    }
  }
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      for (Element z = 0; z < m; ++z) {
        if (h.binary(g.mul, h.binary(g.mul, x, y), z) != h.binary(g.mul, x, h.binary(g.mul, y, z))) {
          fail("(x*y)*z == x*(y*z)", {x, y, z});
        }
      }
    }
  }
  if (sig.variety().is_abelian()) {
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        if (h.binary(g.mul, x, y) != h.binary(g.mul, y, x)) fail("x*y == y*x", {x, y});
      }
    }
  }
  if (sig.variety().kind == Variety::Kind::abelian_exponent_p) {
    const unsigned p = sig.variety().p;
    for (Element x = 0; x < m; ++x) {
      Element acc = x;
      for (unsigned k = 1; k < p; ++k) acc = h.binary(g.mul, acc, x);
      if (acc != e) fail("x^" + std::to_string(p) + " == e", {x});
    }
  }
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, Signature signature, std::size_t carrier,
                             std::vector<std::vector<Element>> tables)
    : name_(std::move(name)), signature_(std::move(signature)), carrier_(carrier), tables_(std::move(tables)) {
  if (carrier_ == 0) throw AlgebraError("carrier of '" + name_ + "' is empty");
  if (tables_.size() != signature_.op_count()) {
    throw AlgebraError("'" + name_ + "' needs one table per operation symbol");
  }
  for (std::size_t op = 0; op < tables_.size(); ++op) {
    const auto& sym = signature_.op(op);
    if (tables_[op].size() != table_size(carrier_, sym.arity)) {
      throw AlgebraError("table for '" + sym.sym + "' is not total: expected " +
                         std::to_string(table_size(carrier_, sym.arity)) + " entries, got " +
                         std::to_string(tables_[op].size()));
    }
    for (std::size_t i = 0; i < tables_[op].size(); ++i) {
      if (tables_[op][i] >= carrier_) {
        throw AlgebraError("entry out of range in table '" + sym.sym + "' at flat index " + std::to_string(i) +
                           ": " + std::to_string(tables_[op][i]) + " >= " + std::to_string(carrier_));
      }
    }
  }
  if (signature_.variety().is_group()) check_group_identities(*this);
}

Element FiniteAlgebra::apply(std::size_t op, std::span<const Element> args) const {
  std::size_t index = 0;
  for (auto a : args) index = index * carrier_ + a;
  return tables_[op][index];
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

/// Group tables from a multiplication function on 0..m-1 with unit 0.
FiniteAlgebra group_from(std::string name, std::size_t m, Variety variety,
                         const std::function<Element(Element, Element)>& mul) {
  std::vector<Element> mul_table(m * m), inv_table(m);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) mul_table[a * m + b] = mul(a, b);
  }
  Element unit = 0;
  for (Element a = 0; a < m; ++a) {
    bool is_unit = true;
    for (Element b = 0; b < m && is_unit; ++b) is_unit = mul_table[a * m + b] == b;
    if (is_unit) {
      unit = a;
      break;
    }
  }
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      if (mul_table[a * m + b] == unit) {
        inv_table[a] = b;
        break;
      }
    }
  }
  return FiniteAlgebra(std::move(name), Signature::group(variety), m, {mul_table, inv_table, {unit}});
}

}  // namespace

FiniteAlgebra cyclic(std::size_t n) {
  if (n == 0) throw AlgebraError("cyclic group order must be positive");
  return group_from("z" + std::to_string(n), n, Variety::abelian_group(),
                    [n](Element a, Element b) { return static_cast<Element>((a + b) % n); });
}

FiniteAlgebra direct_product(const FiniteAlgebra& first, const FiniteAlgebra& second) {
  const auto& s1 = first.signature();
  const auto& s2 = second.signature();
  if (!s1.same_language(s2)) throw AlgebraError("direct product needs a common signature");
  Variety variety = Variety::generic();
  if (s1.variety() == s2.variety()) {
    variety = s1.variety();
  } else if (s1.variety().is_abelian() && s2.variety().is_abelian()) {
    variety = Variety::abelian_group();
  } else if (s1.variety().is_group() && s2.variety().is_group()) {
    variety = Variety::group();
  }
  const std::size_t m2 = second.size();
  const std::size_t m = first.size() * m2;
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < s1.op_count(); ++op) {
    const std::size_t arity = s1.op(op).arity;
    std::vector<Element> table(table_size(m, arity));
    std::vector<Element> args(arity), a1(arity), a2(arity);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t k = arity; k-- > 0;) {
        args[k] = static_cast<Element>(rest % m);
        rest /= m;
        a1[k] = static_cast<Element>(args[k] / m2);
        a2[k] = static_cast<Element>(args[k] % m2);
      }
      table[idx] = static_cast<Element>(first.apply(op, a1) * m2 + second.apply(op, a2));
    }
    tables.push_back(std::move(table));
  }
  Signature sig(s1.name(), s1.ops(), s1.infix() ? std::optional(s1.op(*s1.infix()).sym) : std::nullopt, variety);
  return FiniteAlgebra(first.name() + "x" + second.name(), std::move(sig), m, std::move(tables));
}

FiniteAlgebra elementary_abelian(unsigned p, unsigned m) {
  if (!is_prime(p)) throw AlgebraError(std::to_string(p) + " is not prime");
  if (m == 0) throw AlgebraError("elementary abelian rank must be positive");
  std::size_t size = 1;
  for (unsigned i = 0; i < m; ++i) size *= p;
  return group_from("el" + std::to_string(p) + "_" + std::to_string(m), size, Variety::abelian_exponent(p),
                    [p](Element a, Element b) {
                      Element out = 0, scale = 1;
                      while (a || b) {
                        out += scale * ((a % p + b % p) % p);
                        a /= p;
                        b /= p;
                        scale *= p;
                      }
                      return out;
                    });
}

FiniteAlgebra dihedral(std::size_t n) {
  if (n == 0) throw AlgebraError("dihedral parameter must be positive");
  // r^a s^f with s r = r^{-1} s; element r^a -> a, r^a s -> n + a.
  return group_from("d" + std::to_string(n), 2 * n, Variety::group(), [n](Element x, Element y) {
    const std::size_t a = x % n, fa = x / n, b = y % n, fb = y / n;
    const std::size_t rot = fa ? (a + n - b) % n : (a + b) % n;
    return static_cast<Element>((fa ^ fb) * n + rot);
  });
}

FiniteAlgebra symmetric3() {
  FiniteAlgebra d3 = dihedral(3);
  return FiniteAlgebra("s3", d3.signature(), d3.size(),
                       {d3.table(0), d3.table(1), d3.table(2)});
}

FiniteAlgebra quaternion() {
  // Basis index 0..3 = 1, i, j, k; sign bit. Encoded as 2*basis + sign.
  static const int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int basis_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return group_from("q8", 8, Variety::group(), [](Element x, Element y) {
    const int bx = static_cast<int>(x / 2), sx = static_cast<int>(x % 2);
    const int by = static_cast<int>(y / 2), sy = static_cast<int>(y % 2);
    return static_cast<Element>(2 * basis_mul[bx][by] + (sx ^ sy ^ basis_sign[bx][by]));
  });
}

ClosureTrace closure_trace(const FiniteAlgebra& h, std::span<const Element> generators) {
  ClosureTrace trace;
  trace.step_of.assign(h.size(), ClosureTrace::npos);
  const auto& sig = h.signature();
  auto add = [&](ClosureTrace::Step step) {
    if (trace.step_of[step.element] != ClosureTrace::npos) return;
    trace.step_of[step.element] = trace.steps.size();
    trace.steps.push_back(std::move(step));
  };
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g] >= h.size()) throw AlgebraError("generator outside carrier");
    add({generators[g], 1, g, 0, {}});
  }
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    if (sig.op(op).arity == 0) add({h.constant(op), 1, std::nullopt, op, {}});
  }
  if (!trace.steps.empty()) trace.rounds = 1;
  std::size_t lo = 0, hi = trace.steps.size();
  std::vector<std::size_t> idx;
  std::vector<Element> args;
  for (std::size_t round = 2; lo < hi; ++round) {
    for (std::size_t op = 0; op < sig.op_count(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      if (arity == 0) continue;
      idx.assign(arity, 0);
      args.resize(arity);
      bool done = false;
      while (!done) {
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= lo; })) {
          for (std::size_t k = 0; k < arity; ++k) args[k] = trace.steps[idx[k]].element;
          add({h.apply(op, args), round, std::nullopt, op, idx});
        }
        std::size_t k = arity;
        done = true;
        while (k-- > 0) {
          if (++idx[k] < hi) {
            done = false;
            break;
          }
          idx[k] = 0;
        }
      }
    }
    lo = hi;
    hi = trace.steps.size();
    if (lo < hi) trace.rounds = round;
  }
  return trace;
}

std::vector<Element> subalgebra_generate(const FiniteAlgebra& h, std::span<const Element> generators) {
  auto trace = closure_trace(h, generators);
  std::vector<Element> out;
  for (const auto& s : trace.steps) out.push_back(s.element);
  std::sort(out.begin(), out.end());
  return out;
}

bool graph_is_isomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                          std::span<const std::pair<Element, Element>> pairs) {
  if (!h1.signature().same_language(h2.signature())) throw AlgebraError("algebras have different signatures");
  const auto& sig = h1.signature();
  const std::size_t m2 = h2.size();
  std::vector<char> in(h1.size() * m2, 0);
  std::vector<std::pair<Element, Element>> members;
  auto add = [&](Element a, Element b) {
    if (a >= h1.size() || b >= m2) throw AlgebraError("pair outside carriers");
    if (!in[a * m2 + b]) {
      in[a * m2 + b] = 1;
      members.emplace_back(a, b);
    }
  };
  for (auto [a, b] : pairs) add(a, b);
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    if (sig.op(op).arity == 0) add(h1.constant(op), h2.constant(op));
  }
  std::size_t lo = 0, hi = members.size();
  std::vector<std::size_t> idx;
  std::vector<Element> a1, a2;
  while (lo < hi) {
    for (std::size_t op = 0; op < sig.op_count(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      if (arity == 0) continue;
      idx.assign(arity, 0);
      a1.resize(arity);
      a2.resize(arity);
      bool done = false;
      while (!done) {
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= lo; })) {
          for (std::size_t k = 0; k < arity; ++k) {
            a1[k] = members[idx[k]].first;
            a2[k] = members[idx[k]].second;
          }
          add(h1.apply(op, a1), h2.apply(op, a2));
        }
        std::size_t k = arity;
        done = true;
        while (k-- > 0) {
          if (++idx[k] < hi) {
            done = false;
            break;
          }
          idx[k] = 0;
        }
      }
    }
    lo = hi;
    hi = members.size();
  }
  std::vector<char> first_seen(h1.size(), 0), second_seen(m2, 0);
  for (auto [a, b] : members) {
    if (first_seen[a] || second_seen[b]) return false;
    first_seen[a] = second_seen[b] = 1;
  }
  return true;
}

bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to, std::span<const Element> map) {
  const auto& sig = from.signature();
  const std::size_t m = from.size();
  std::vector<Element> args, mapped;
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    const std::size_t arity = sig.op(op).arity;
    const auto& table = from.table(op);
    args.assign(arity, 0);
    mapped.resize(arity);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t k = arity; k-- > 0;) {
        args[k] = static_cast<Element>(rest % m);
        rest /= m;
        mapped[k] = map[args[k]];
      }
      if (map[table[idx]] != to.apply(op, mapped)) return false;
    }
  }
  return true;
}

namespace {

std::vector<Element> generating_sequence(const FiniteAlgebra& h) {
  std::vector<Element> gens;
  auto current = subalgebra_generate(h, gens);
  while (current.size() < h.size()) {
    std::vector<char> in(h.size(), 0);
    for (auto c : current) in[c] = 1;
    Element best = 0;
    std::size_t best_size = 0;
    for (Element a = 0; a < h.size(); ++a) {
      if (in[a]) continue;
      gens.push_back(a);
      const std::size_t s = subalgebra_generate(h, gens).size();
      gens.pop_back();
      if (s > best_size) {
        best_size = s;
        best = a;
      }
    }
    gens.push_back(best);
    current = subalgebra_generate(h, gens);
  }
  return gens;
}

/// Extends generator images along a trace; false when the partial map is not
/// an injective homomorphism of the traced subalgebra.
bool extend_along(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const ClosureTrace& trace,
                  std::span<const Element> images, std::vector<Element>& map, std::vector<char>& used) {
  constexpr Element unset = static_cast<Element>(-1);
  map.assign(h1.size(), unset);
  used.assign(h2.size(), 0);
  std::vector<Element> args;
  for (const auto& step : trace.steps) {
    Element image;
    if (step.generator) {
      image = images[*step.generator];
    } else {
      args.clear();
      for (auto a : step.args) args.push_back(map[trace.steps[a].element]);
      image = h2.apply(step.op, args);
    }
    if (used[image]) return false;
    used[image] = 1;
    map[step.element] = image;
  }
  // Closure is a subalgebra, so every table entry over it is traced.
  const auto& sig = h1.signature();
  std::vector<Element> elems;
  for (const auto& s : trace.steps) elems.push_back(s.element);
  std::vector<std::size_t> idx;
  std::vector<Element> a1, a2;
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    const std::size_t arity = sig.op(op).arity;
    if (arity == 0) {
      if (map[h1.constant(op)] != h2.constant(op)) return false;
      continue;
    }
    idx.assign(arity, 0);
    a1.resize(arity);
    a2.resize(arity);
    bool done = false;
    while (!done) {
      for (std::size_t k = 0; k < arity; ++k) {
        a1[k] = elems[idx[k]];
        a2[k] = map[a1[k]];
      }
      if (map[h1.apply(op, a1)] != h2.apply(op, a2)) return false;
      std::size_t k = arity;
      done = true;
      while (k-- > 0) {
        if (++idx[k] < elems.size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
    }
  }
  return true;
}

}  // namespace

void for_each_isomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                          const std::function<bool(const Permutation&)>& visit, const Guards& guards) {
  if (h1.size() > guards.max_carrier || h2.size() > guards.max_carrier) {
    throw GuardError("carrier exceeds guard of " + std::to_string(guards.max_carrier) + " for isomorphism search");
  }
  if (h1.size() != h2.size() || !h1.signature().same_language(h2.signature())) return;
  const auto gens = generating_sequence(h1);
  std::vector<ClosureTrace> traces;
  for (std::size_t k = 0; k <= gens.size(); ++k) {
    traces.push_back(closure_trace(h1, std::span<const Element>(gens.data(), k)));
  }
  auto profile = [](const FiniteAlgebra& h) {
    std::vector<std::size_t> out(h.size());
    for (Element a = 0; a < h.size(); ++a) {
      Element g[] = {a};
      out[a] = subalgebra_generate(h, g).size();
    }
    return out;
  };
  const auto prof1 = profile(h1);
  const auto prof2 = profile(h2);

  std::vector<Element> images;
  std::vector<Element> map;
  std::vector<char> used;
  bool stop = false;
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (stop) return;
    if (!extend_along(h1, h2, traces[k], images, map, used)) return;
    if (k == gens.size()) {
      if (is_homomorphism(h1, h2, map) && !visit(map)) stop = true;
      return;
    }
    for (Element b = 0; b < h2.size() && !stop; ++b) {
      if (prof2[b] != prof1[gens[k]]) continue;
      images.push_back(b);
      search(k + 1);
      images.pop_back();
    }
  };
  search(0);
}

AutGroup automorphisms(const FiniteAlgebra& h, const Guards& guards) {
  std::vector<Permutation> perms;
  for_each_isomorphism(
      h, h,
      [&](const Permutation& p) {
        perms.push_back(p);
        if (perms.size() > guards.max_automorphisms) {
          throw GuardError("automorphism group of '" + h.name() + "' exceeds guard of " +
                           std::to_string(guards.max_automorphisms));
        }
        return true;
      },
      guards);
  Permutation id(h.size());
  std::iota(id.begin(), id.end(), Element{0});
  auto it = std::find(perms.begin(), perms.end(), id);
  if (it != perms.end()) std::iter_swap(perms.begin(), it);
  return AutGroup(std::move(perms));
}

std::optional<Permutation> isomorphic(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const Guards& guards) {
  std::optional<Permutation> found;
  for_each_isomorphism(
      h1, h2,
      [&](const Permutation& p) {
        found = p;
        return false;
      },
      guards);
  return found;
}

}  // namespace logeo
