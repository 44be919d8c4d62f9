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

#include "refine.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "logeo/error.hpp"

namespace logeo::detail {

JointSpace::JointSpace(const std::vector<AlgebraPtr>& algebras, const VarSort& sort, const Guards& guards) {
  if (algebras.empty() || algebras.size() > 2) throw Error("a joint space holds one or two algebras");
  offsets_.push_back(0);
  for (const auto& h : algebras) {
    spaces_.emplace_back(h, sort, guards);
    offsets_.push_back(offsets_.back() + spaces_.back().point_count());
  }
  if (offsets_.back() > guards.max_points) {
    throw GuardError("joint point space of " + std::to_string(offsets_.back()) + " points exceeds guard of " +
                     std::to_string(guards.max_points));
  }
  if (spaces_.size() == 2 && !algebras[0]->signature().same_language(algebras[1]->signature())) {
    throw AlgebraError("algebras over different signatures");
  }
}

std::vector<Element> JointSpace::decode(std::uint64_t g) const {
  const std::size_t part = part_of(g);
  return spaces_[part].decode(g - offsets_[part]);
}

std::uint64_t JointSpace::encode(std::size_t part, std::span<const Element> point) const {
  return offsets_[part] + spaces_[part].index(point);
}

std::uint64_t JointSpace::with_coordinate(std::uint64_t g, std::size_t var, Element a) const {
  const std::size_t part = part_of(g);
  return offsets_[part] + spaces_[part].with_coordinate(g - offsets_[part], var, a);
}

bool JointSpace::holds(const Formula& u, std::uint64_t g) const {
  auto point = decode(g);
  return satisfies(u, algebra(part_of(g)), point);
}

namespace {

template <typename T>
ClassIds relabel(std::span<const T> labels) {
  ClassIds out(labels.size());
  std::unordered_map<T, std::uint32_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out[i] = seen.emplace(labels[i], static_cast<std::uint32_t>(seen.size())).first->second;
  }
  return out;
}

// Labels elements of the subalgebra generated by `point` and the constants in
// an order fixed by the structure alone, then lists the operation tables over
// those labels. Equal codes mean the label correspondence is an isomorphism
// sending point to point.
class SubalgebraEncoder {
 public:
  explicit SubalgebraEncoder(const FiniteAlgebra& h) : h_(h), label_(h.size(), kNone) {}

  const std::vector<std::uint32_t>& encode(std::span<const Element> point) {
    std::fill(label_.begin(), label_.end(), kNone);
    elems_.clear();
    code_.clear();
    const Signature& sig = h_.signature();
    for (Element a : point) code_.push_back(visit(a));
    for (std::size_t op = 0; op < sig.op_count(); ++op) {
      if (sig.op(op).arity == 0) code_.push_back(visit(h_.constant(op)));
    }
    std::size_t lo = 0;
    while (lo < elems_.size()) {
      const std::size_t hi = elems_.size();
      for (std::size_t op = 0; op < sig.op_count(); ++op) {
        const std::size_t arity = sig.op(op).arity;
        if (arity == 0) continue;
        for_tuples(arity, hi, [&](const std::vector<std::size_t>& idx) {
          if (std::none_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= lo; })) return;
          visit(apply(op, idx));
        });
      }
      lo = hi;
    }
    code_.push_back(static_cast<std::uint32_t>(elems_.size()));
    for (std::size_t op = 0; op < sig.op_count(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      if (arity == 0) continue;
      for_tuples(arity, elems_.size(),
                 [&](const std::vector<std::size_t>& idx) { code_.push_back(label_[apply(op, idx)]); });
    }
    return code_;
  }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  std::uint32_t visit(Element a) {
    if (label_[a] == kNone) {
      label_[a] = static_cast<std::uint32_t>(elems_.size());
      elems_.push_back(a);
    }
    return label_[a];
  }

  Element apply(std::size_t op, const std::vector<std::size_t>& idx) {
    args_.resize(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) args_[k] = elems_[idx[k]];
    return h_.apply(op, args_);
  }

  template <typename F>
  static void for_tuples(std::size_t arity, std::size_t bound, F&& f) {
    if (bound == 0) return;
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      f(idx);
      std::size_t k = arity;
      while (k > 0 && ++idx[k - 1] == bound) idx[--k] = 0;
      if (k == 0) return;
    }
  }

  const FiniteAlgebra& h_;
  std::vector<std::uint32_t> label_;
  std::vector<Element> elems_;
  std::vector<Element> args_;
  std::vector<std::uint32_t> code_;
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using CodeTable = std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash>;

std::uint32_t intern(CodeTable& table, const std::vector<std::uint32_t>& code) {
  return table.emplace(code, static_cast<std::uint32_t>(table.size())).first->second;
}

}  // namespace

ClassIds canonical_ids(std::span<const std::uint64_t> labels) { return relabel<std::uint64_t>(labels); }
ClassIds canonical_ids(std::span<const std::uint32_t> labels) { return relabel<std::uint32_t>(labels); }

std::size_t class_count(const ClassIds& ids) {
  std::uint32_t top = 0;
  for (auto id : ids) top = std::max(top, id + 1);
  return top;
}

ClassIds tau_ids(const JointSpace& space) {
  ClassIds ids(space.size());
  CodeTable table;
  for (std::size_t part = 0; part < space.parts(); ++part) {
    SubalgebraEncoder encoder(space.algebra(part));
    const Space& s = space.space(part);
    for (PointIndex i = 0; i < s.point_count(); ++i) {
      auto point = s.decode(i);
      ids[space.offset(part) + i] = intern(table, encoder.encode(point));
    }
  }
  return canonical_ids(std::span<const std::uint32_t>(ids));
}

Refinement::Refinement(JointSpace space) : space_(std::move(space)) {
  levels_.push_back(tau_ids(space_));
  const std::size_t n = space_.sort().size();
  while (true) {
    const ClassIds& prev = levels_.back();
    std::vector<std::vector<std::uint32_t>> line_ids(n, std::vector<std::uint32_t>(space_.size()));
    for (std::size_t var = 0; var < n; ++var) {
      CodeTable lines;
      std::vector<std::uint32_t> seen;
      for (std::size_t part = 0; part < space_.parts(); ++part) {
        const Space& s = space_.space(part);
        const std::uint64_t off = space_.offset(part);
        const std::size_t m = s.h().size();
        for (PointIndex i = 0; i < s.point_count(); ++i) {
          if (s.coordinate(i, var) != 0) continue;
          seen.clear();
          for (Element a = 0; a < m; ++a) seen.push_back(prev[off + i + a * s.stride(var)]);
          std::sort(seen.begin(), seen.end());
          seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
          const std::uint32_t id = intern(lines, seen);
          for (Element a = 0; a < m; ++a) line_ids[var][off + i + a * s.stride(var)] = id;
        }
      }
    }
    CodeTable signatures;
    ClassIds next(space_.size());
    std::vector<std::uint32_t> sig(n + 1);
    for (std::uint64_t g = 0; g < space_.size(); ++g) {
      sig[0] = prev[g];
      for (std::size_t var = 0; var < n; ++var) sig[var + 1] = line_ids[var][g];
      next[g] = intern(signatures, sig);
    }
    next = canonical_ids(std::span<const std::uint32_t>(next));
    if (class_count(next) == class_count(prev)) break;
    levels_.push_back(std::move(next));
  }
}

std::vector<std::uint32_t> Refinement::reachable(std::size_t r, std::uint64_t g, std::size_t var) const {
  std::vector<std::uint32_t> out;
  for (Element a = 0; a < space_.carrier_of(g); ++a) out.push_back(levels_[r][space_.with_coordinate(g, var, a)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Formula Refinement::truth() const {
  const VarSort& sort = space_.sort();
  if (!sort.empty()) return Formula::equality(sort, Term::variable(0), Term::variable(0));
  const Signature& sig = space_.algebra(0).signature();
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    if (sig.op(op).arity == 0) return Formula::equality(sort, Term::apply(op), Term::apply(op));
  }
  throw Error("no formula over an empty sort without constants");
}

Formula Refinement::separator(std::uint64_t p, std::span<const std::uint64_t> qs) const {
  return separate(p, std::vector<std::uint64_t>(qs.begin(), qs.end()), levels_.size() - 1);
}

Formula Refinement::separate(std::uint64_t p, std::vector<std::uint64_t> qs, std::size_t r) const {
  const ClassIds& ids = levels_[r];
  {
    std::vector<std::uint32_t> classes;
    std::vector<std::uint64_t> kept;
    for (auto q : qs) {
      if (ids[q] == ids[p]) throw Error("internal: separating two points of one class");
      if (std::find(classes.begin(), classes.end(), ids[q]) != classes.end()) continue;
      classes.push_back(ids[q]);
      kept.push_back(q);
    }
    qs = std::move(kept);
  }
  if (qs.empty()) return truth();
  if (r == 0) return separate_atomic(p, qs);

  const ClassIds& lower = levels_[r - 1];
  std::vector<Formula> parts;
  std::vector<std::uint64_t> low, high;
  for (auto q : qs) (lower[q] != lower[p] ? low : high).push_back(q);
  if (!low.empty()) parts.push_back(separate(p, low, r - 1));

  const std::size_t n = space_.sort().size();
  while (!high.empty()) {
    const std::uint64_t q = high.front();
    std::optional<Formula> literal;
    for (std::size_t k = n; k-- > 0 && !literal;) {
      auto rp = reachable(r - 1, p, k);
      auto rq = reachable(r - 1, q, k);
      if (rp == rq) continue;
      auto outside = [&](std::uint64_t g, const std::vector<std::uint32_t>& set) {
        for (Element a = 0; a < space_.carrier_of(g); ++a) {
          auto moved = space_.with_coordinate(g, k, a);
          if (!std::binary_search(set.begin(), set.end(), lower[moved])) return std::optional<std::uint64_t>(moved);
        }
        return std::optional<std::uint64_t>();
      };
      auto line = [&](std::uint64_t g) {
        std::vector<std::uint64_t> out;
        for (Element a = 0; a < space_.carrier_of(g); ++a) out.push_back(space_.with_coordinate(g, k, a));
        return out;
      };
      if (auto moved = outside(p, rq)) {
        literal = Formula::exists(k, separate(*moved, line(q), r - 1));
      } else if (auto moved_q = outside(q, rp)) {
        literal = Formula::negation(Formula::exists(k, separate(*moved_q, line(p), r - 1)));
      }
    }
    if (!literal) throw Error("internal: no variable distinguishes two refined classes");
    std::vector<std::uint64_t> rest;
    for (auto h : high) {
      if (h != q && space_.holds(*literal, h)) rest.push_back(h);
    }
    high = std::move(rest);
    parts.push_back(std::move(*literal));
  }
  return Formula::conjunction_of(std::move(parts));
}

namespace {

struct Rep {
  Term term;
  std::size_t cost;
  bool ground;
  std::vector<Element> vals;
};

constexpr std::size_t kRepBudget = 20000;

}  // namespace

Formula Refinement::separate_atomic(std::uint64_t p, const std::vector<std::uint64_t>& qs) const {
  const VarSort& sort = space_.sort();
  const Signature& sig = space_.algebra(0).signature();
  std::vector<std::uint64_t> pts{p};
  pts.insert(pts.end(), qs.begin(), qs.end());
  std::vector<std::vector<Element>> coords;
  std::vector<const FiniteAlgebra*> algs;
  for (auto g : pts) {
    coords.push_back(space_.decode(g));
    algs.push_back(&space_.algebra(space_.part_of(g)));
  }

  std::vector<Rep> reps;
  std::map<std::vector<Element>, std::size_t> seen;
  auto add = [&](Term t, std::size_t cost, bool ground, std::vector<Element> vals) {
    auto [it, fresh] = seen.emplace(vals, reps.size());
    if (!fresh) {
      if (cost < reps[it->second].cost) reps[it->second] = Rep{std::move(t), cost, ground, std::move(vals)};
      return false;
    }
    if (reps.size() >= kRepBudget) throw GuardError("atomic separation exceeds term budget");
    reps.push_back(Rep{std::move(t), cost, ground, std::move(vals)});
    return true;
  };
  for (std::size_t i = 0; i < sort.size(); ++i) {
    std::vector<Element> vals;
    for (auto& c : coords) vals.push_back(c[i]);
    add(Term::variable(i), 1, false, std::move(vals));
  }
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    if (sig.op(op).arity != 0) continue;
    std::vector<Element> vals;
    for (auto* h : algs) vals.push_back(h->constant(op));
    add(Term::apply(op), 0, true, std::move(vals));
  }

  auto separable = [&](std::size_t k) {
    std::map<Element, Element> fwd, back;
    for (const auto& rep : reps) {
      auto a = fwd.emplace(rep.vals[0], rep.vals[k]);
      auto b = back.emplace(rep.vals[k], rep.vals[0]);
      if (a.first->second != rep.vals[k] || b.first->second != rep.vals[0]) return true;
    }
    return false;
  };
  auto all_separable = [&] {
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (!separable(k)) return false;
    }
    return true;
  };

  std::size_t lo = 0;
  while (!all_separable()) {
    const std::size_t hi = reps.size();
    bool grew = false;
    for (std::size_t op = 0; op < sig.op_count(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      if (arity == 0 || hi == 0) continue;
      std::vector<std::size_t> idx(arity, 0);
      std::vector<Element> args(arity);
      while (true) {
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= lo; })) {
          std::vector<Term> children;
          std::size_t cost = 1;
          bool ground = true;
          for (auto i : idx) {
            children.push_back(reps[i].term);
            cost += reps[i].cost;
            ground = ground && reps[i].ground;
          }
          std::vector<Element> vals(pts.size());
          for (std::size_t k = 0; k < pts.size(); ++k) {
            for (std::size_t a = 0; a < arity; ++a) args[a] = reps[idx[a]].vals[k];
            vals[k] = algs[k]->apply(op, args);
          }
          grew = add(Term::apply(op, std::move(children)), cost, ground, std::move(vals)) || grew;
        }
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] == hi) idx[--k] = 0;
        if (k == 0) break;
      }
    }
    if (!grew) throw Error("internal: atomic kernels do not separate the points");
    lo = hi;
  }

  std::vector<std::size_t> remaining;
  for (std::size_t k = 1; k < pts.size(); ++k) remaining.push_back(k);
  std::vector<Formula> literals;
  while (!remaining.empty()) {
    std::size_t best_i = 0, best_j = 0, best_kills = 0, best_cost = 0;
    bool best_ground = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (reps[i].ground && reps[j].ground) continue;
        const bool eq = reps[i].vals[0] == reps[j].vals[0];
        std::size_t kills = 0;
        for (auto k : remaining) kills += (reps[i].vals[k] == reps[j].vals[k]) != eq;
        if (kills == 0) continue;
        const std::size_t cost = reps[i].cost + reps[j].cost;
        const bool ground = reps[i].ground || reps[j].ground;
        const bool better = kills > best_kills ||
                            (kills == best_kills && (cost < best_cost || (cost == best_cost && ground && !best_ground)));
        if (better) {
          best_i = i, best_j = j, best_kills = kills, best_cost = cost, best_ground = ground;
        }
      }
    }
    if (best_kills == 0) throw Error("internal: no atomic literal separates the points");
    std::size_t l = best_i, r = best_j;
    if (reps[l].ground || (!reps[r].ground && reps[l].cost < reps[r].cost)) std::swap(l, r);
    const bool eq = reps[l].vals[0] == reps[r].vals[0];
    Formula atom = Formula::equality(sort, reps[l].term, reps[r].term);
    literals.push_back(eq ? atom : Formula::negation(atom));
    std::vector<std::size_t> rest;
    for (auto k : remaining) {
      if ((reps[l].vals[k] == reps[r].vals[k]) == eq) rest.push_back(k);
    }
    remaining = std::move(rest);
  }
  return Formula::conjunction_of(std::move(literals));
}

std::vector<std::string> aux_names(const VarSort& sort, const Signature& sig, std::size_t count) {
  std::vector<std::string> out;
  auto usable = [&](const std::string& name) {
    return !sort.contains(name) && !sig.find(name) && name != "E" && name != "A" && name != "subst" &&
           std::find(out.begin(), out.end(), name) == out.end();
  };
  for (const char* name : {"y", "z", "u", "v", "w"}) {
    if (out.size() == count) return out;
    if (usable(name)) out.emplace_back(name);
  }
  for (std::size_t i = 1; out.size() < count; ++i) {
    std::string name = "y" + std::to_string(i);
    if (usable(name)) out.push_back(name);
  }
  return out;
}

Substitution aux_lift(const VarSort& extended, const VarSort& sort) {
  std::vector<Term> images;
  for (std::size_t i = 0; i < extended.size(); ++i) images.push_back(Term::variable(i < sort.size() ? i : 0));
  return Substitution(extended, sort, std::move(images));
}

}  // namespace logeo::detail
