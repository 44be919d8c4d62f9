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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "logeo/algebra_io.hpp"
#include "logeo/axioms.hpp"
#include "logeo/error.hpp"
#include "logeo/geometry.hpp"
#include "logeo/typesys.hpp"
#include "logeo/zline.hpp"

namespace logeo::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> guard_points;
  std::optional<std::size_t> guard_carrier;
  std::uint64_t seed = 1;
  bool strict = false;

  bool as_json() const { return format == "json"; }
};

// Restores the process-wide guards when a command finishes.
class GuardScope {
 public:
  explicit GuardScope(const Options& opts) : saved_(Guards::defaults()) {
    Guards g = saved_;
    if (opts.guard_points) g.max_points = *opts.guard_points;
    if (opts.guard_carrier) g.max_carrier = *opts.guard_carrier;
    Guards::set_defaults(g);
  }
  ~GuardScope() { Guards::set_defaults(saved_); }
  GuardScope(const GuardScope&) = delete;
  GuardScope& operator=(const GuardScope&) = delete;

 private:
  Guards saved_;
};

AlgebraPtr load(const std::string& name) {
  AlgebraPtr h = resolve_algebra(name);
  const auto limit = Guards::defaults().max_carrier;
  if (h->size() > limit) {
    throw GuardError("algebra " + h->name() + " has " + std::to_string(h->size()) + " elements; carrier guard is " +
                     std::to_string(limit));
  }
  return h;
}

json point_json(std::span<const Element> point) { return json(std::vector<Element>(point.begin(), point.end())); }

json set_json(const PointSet& set) {
  json points = json::array();
  for (auto i : set.indices()) points.push_back(point_json(set.space().decode(i)));
  return {{"count", set.count()}, {"points", points}, {"hex", set.to_hex()}};
}

std::string verdict(bool b) { return b ? "true" : "false"; }

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// One formula per non-empty line; '#' starts a comment line.
FormulaSystem read_formula_file(const std::filesystem::path& path, const AlgebraPtr& h, const VarSort& sort) {
  FormulaSystem t{sort, {}};
  std::istringstream lines(read_file(path));
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    t.formulas.push_back(parse_formula(line, h->signature(), sort));
  }
  return t;
}

std::pair<Term, Term> parse_equation(const std::string& text, const AlgebraPtr& h, const VarSort& sort) {
  const auto at = text.find("==");
  if (at == std::string::npos) throw ParseError("expected 'w == w''", 0);
  return {parse_term(trim(text.substr(0, at)), h->signature(), sort),
          parse_term(trim(text.substr(at + 2)), h->signature(), sort)};
}

// "t1 == t2; t3 == t4"; empty text gives the empty system.
EquationSystem parse_equations(const std::string& text, const AlgebraPtr& h, const VarSort& sort) {
  EquationSystem t{sort, {}};
  std::istringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    part = trim(part);
    if (!part.empty()) t.pairs.push_back(parse_equation(part, h, sort));
  }
  return t;
}

class Commands {
 public:
  Commands(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  int eval(const std::string& alg, const std::string& sort_text, const std::string& formula_text) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    Formula u = parse_formula(formula_text, h->signature(), sort);
    PointSet val = value(u, h);
    if (opts_.as_json()) {
      json doc = {{"algebra", h->name()}, {"sort", sort.names()}, {"formula", print_formula(u, h->signature())}};
      doc["value"] = set_json(val);
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << val.to_string() << '\n';
    }
    return ok;
  }

  int types(const std::string& alg, const std::string& sort_text) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    TypeCensus census = type_census(h, sort, true);
    if (opts_.as_json()) {
      json rows = json::array();
      for (const auto& row : census.rows) {
        rows.push_back({{"class", row.class_id},
                        {"size", row.size},
                        {"representative", point_json(row.representative)},
                        {"formula", print_formula(*row.defining_formula, h->signature())}});
      }
      out_ << json{{"algebra", h->name()}, {"sort", sort.names()}, {"stabilized", census.stabilized}, {"types", rows}}
                  .dump(2)
           << '\n';
      return ok;
    }
    std::vector<std::vector<std::string>> table{{"class", "size", "representative", "formula"}};
    for (const auto& row : census.rows) {
      table.push_back({std::to_string(row.class_id), std::to_string(row.size), format_tuple(row.representative),
                       print_formula(*row.defining_formula, h->signature())});
    }
    print_table(out_, table);
    if (!census.stabilized) out_ << "warning: escalation did not stabilise\n";
    return ok;
  }

  int partitions(const std::string& alg, const std::string& sort_text) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    Partition tau = tau_partition(h, sort);
    RhoResult rho = rho_partition(h, sort);
    Partition orbits = orbit_partition(h, sort);
    const bool orbit_in_rho = orbits.refines(rho.partition);
    const bool rho_in_tau = rho.partition.refines(tau);
    if (opts_.as_json()) {
      json points = json::array();
      for (PointIndex i = 0; i < tau.ids().size(); ++i) {
        points.push_back({{"point", point_json(tau.space().decode(i))},
                          {"tau", tau.class_of(i)},
                          {"rho", rho.partition.class_of(i)},
                          {"orbit", orbits.class_of(i)}});
      }
      out_ << json{{"algebra", h->name()},
                   {"sort", sort.names()},
                   {"points", points},
                   {"classes", {{"tau", tau.class_count()}, {"rho", rho.partition.class_count()},
                                {"orbit", orbits.class_count()}}},
                   {"rho_aux_vars", rho.witness_aux_vars},
                   {"rho_stabilized", rho.stabilized},
                   {"chain", {{"orbit_in_rho", orbit_in_rho}, {"rho_in_tau", rho_in_tau}}}}
                  .dump(2)
           << '\n';
    } else {
      std::vector<std::vector<std::string>> table{{"point", "tau", "rho", "orbit"}};
      for (PointIndex i = 0; i < tau.ids().size(); ++i) {
        table.push_back({format_tuple(tau.space().decode(i)), std::to_string(tau.class_of(i)),
                         std::to_string(rho.partition.class_of(i)), std::to_string(orbits.class_of(i))});
      }
      print_table(out_, table);
      out_ << "classes: tau " << tau.class_count() << ", rho " << rho.partition.class_count() << ", orbit "
           << orbits.class_count() << '\n';
      out_ << "rho auxiliary variables: " << rho.witness_aux_vars << (rho.stabilized ? "" : " (not stabilised)")
           << '\n';
      out_ << "chain orbit <= rho <= tau: " << (orbit_in_rho && rho_in_tau ? "holds" : "VIOLATED") << '\n';
    }
    if (!(orbit_in_rho && rho_in_tau)) throw Error("partition chain violated");
    return ok;
  }

  int perfect(const std::string& alg, const std::string& sort_text) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    RhoResult rho = rho_partition(h, sort);
    Partition orbits = orbit_partition(h, sort);
    const bool logically = rho.partition == orbits;
    const bool strictly = pebble_partition(h, sort, sort.size()) == orbits;
    if (opts_.as_json()) {
      out_ << json{{"algebra", h->name()},
                   {"sort", sort.names()},
                   {"logically_perfect", logically},
                   {"strictly_perfect", strictly},
                   {"rho_classes", rho.partition.class_count()},
                   {"orbit_classes", orbits.class_count()},
                   {"rho_stabilized", rho.stabilized}}
                  .dump(2)
           << '\n';
    } else {
      out_ << verdict(logically) << '\n';
      out_ << "rho classes: " << rho.partition.class_count() << ", orbit classes: " << orbits.class_count() << '\n';
      out_ << "strictly perfect: " << verdict(strictly) << '\n';
    }
    return strict(logically);
  }

  int homogeneous(const std::string& alg, const std::string& sort_text) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    Partition tau = tau_partition(h, sort);
    Partition orbits = orbit_partition(h, sort);
    const bool homog = tau == orbits;
    const bool strictly = pebble_partition(h, sort, sort.size()) == orbits;
    if (opts_.as_json()) {
      out_ << json{{"algebra", h->name()},
                   {"sort", sort.names()},
                   {"homogeneous", homog},
                   {"strictly_perfect", strictly},
                   {"tau_classes", tau.class_count()},
                   {"orbit_classes", orbits.class_count()}}
                  .dump(2)
           << '\n';
    } else {
      out_ << verdict(homog) << '\n';
      out_ << "tau classes: " << tau.class_count() << ", orbit classes: " << orbits.class_count() << '\n';
      out_ << "strictly perfect: " << verdict(strictly) << '\n';
    }
    return strict(homog);
  }

  int isotyped_cmd(const std::string& a1, const std::string& a2, const std::string& sort_text) {
    AlgebraPtr h1 = load(a1), h2 = load(a2);
    VarSort sort = VarSort::parse(sort_text);
    IsotypyResult r = isotyped(h1, h2, sort);
    const std::string holds = r.witness_holds_in == 1 ? h1->name() : h2->name();
    if (opts_.as_json()) {
      json doc = {{"algebras", {h1->name(), h2->name()}},
                  {"sort", sort.names()},
                  {"isotyped", r.isotyped},
                  {"aux_vars", r.aux_vars},
                  {"stabilized", r.stabilized}};
      if (r.witness) {
        doc["witness"] = print_formula(*r.witness, h1->signature());
        doc["witness_holds_in"] = holds;
      }
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << verdict(r.isotyped) << '\n';
      if (r.witness) {
        out_ << "witness: " << print_formula(*r.witness, h1->signature()) << '\n';
        out_ << "holds in: " << holds << '\n';
      }
      if (!r.stabilized) out_ << "warning: escalation did not stabilise\n";
    }
    return strict(r.isotyped);
  }

  int closure(const std::string& alg, const std::string& sort_text, const std::string& file,
              const std::string& formula_text) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    FormulaSystem t = read_formula_file(file, h, sort);
    const bool r = in_logical_closure(t, parse_formula(formula_text, h->signature(), sort), h);
    emit_verdict(r);
    return strict(r);
  }

  int quasi(const std::string& alg, const std::string& sort_text, const std::string& equations,
            const std::string& target) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    EquationSystem t = parse_equations(equations, h, sort);
    auto [w, wp] = parse_equation(target, h, sort);
    const bool r = in_equational_closure(t, w, wp, h);
    emit_verdict(r);
    return strict(r);
  }

  // Lines "CLOSURE? <formula-file> |- <formula>" and
  // "QUASI? <eq>; <eq> |- <w> == <w'>". Relative paths resolve against the
  // batch file's directory.
  int query(const std::string& alg, const std::string& sort_text, const std::string& file) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    const std::filesystem::path base = std::filesystem::path(file).parent_path();
    std::istringstream lines(read_file(file));
    std::string line;
    std::size_t number = 0;
    bool all = true;
    json results = json::array();
    std::vector<std::vector<std::string>> table;
    while (std::getline(lines, line)) {
      ++number;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto turnstile = line.find("|-");
      if (turnstile == std::string::npos) throw ParseError("line " + std::to_string(number) + ": missing '|-'", 0);
      const std::string lhs = trim(line.substr(0, turnstile)), rhs = trim(line.substr(turnstile + 2));
      bool r = false;
      std::string kind;
      if (lhs.rfind("CLOSURE?", 0) == 0) {
        kind = "closure";
        std::filesystem::path path = trim(lhs.substr(8));
        if (path.is_relative()) path = base / path;
        r = in_logical_closure(read_formula_file(path, h, sort), parse_formula(rhs, h->signature(), sort), h);
      } else if (lhs.rfind("QUASI?", 0) == 0) {
        kind = "quasi";
        auto [w, wp] = parse_equation(rhs, h, sort);
        r = in_equational_closure(parse_equations(lhs.substr(6), h, sort), w, wp, h);
      } else {
        throw ParseError("line " + std::to_string(number) + ": expected CLOSURE? or QUASI?", 0);
      }
      all = all && r;
      results.push_back({{"line", number}, {"kind", kind}, {"holds", r}});
      table.push_back({"line " + std::to_string(number) + ":", verdict(r)});
    }
    if (opts_.as_json()) {
      out_ << json{{"algebra", h->name()}, {"sort", sort.names()}, {"results", results}}.dump(2) << '\n';
    } else {
      print_table(out_, table);
    }
    return strict(all);
  }

  int census_exp(unsigned p, unsigned m, unsigned n) {
    ExponentCensus c = exponent_p_census(p, m, n);
    if (opts_.as_json()) {
      json rows = json::array();
      for (const auto& row : c.rows) {
        rows.push_back({{"kernel_basis", row.kernel_basis}, {"value_size", row.value_size},
                        {"single_orbit", row.single_orbit}});
      }
      out_ << json{{"p", p},
                   {"m", m},
                   {"n", n},
                   {"subgroups", c.subgroup_count},
                   {"orbits", c.orbit_count},
                   {"realised_kernels", c.realised_kernels},
                   {"every_value_is_one_orbit", c.every_value_is_one_orbit},
                   {"orbits_exhausted", c.orbits_exhausted},
                   {"ok", c.ok()},
                   {"rows", rows}}
                  .dump(2)
           << '\n';
    } else {
      std::vector<std::vector<std::string>> table{{"kernel basis", "points", "one orbit"}};
      for (const auto& row : c.rows) {
        std::string basis = "<";
        for (std::size_t i = 0; i < row.kernel_basis.size(); ++i) {
          if (i) basis += ", ";
          basis += "(";
          for (std::size_t k = 0; k < row.kernel_basis[i].size(); ++k) {
            basis += (k ? "," : "") + std::to_string(row.kernel_basis[i][k]);
          }
          basis += ")";
        }
        basis += ">";
        table.push_back({basis, std::to_string(row.value_size), verdict(row.single_orbit)});
      }
      print_table(out_, table);
      out_ << "subgroups: " << c.subgroup_count << ", orbits: " << c.orbit_count << ", realised kernels: "
           << c.realised_kernels << '\n';
      out_ << "every value is one orbit: " << verdict(c.every_value_is_one_orbit)
           << ", orbits exhausted: " << verdict(c.orbits_exhausted) << '\n';
    }
    return strict(c.ok());
  }

  int census_orders(const std::string& alg, const std::string& sort_text) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    OrderCensus c = order_formula_census(h, sort);
    if (opts_.as_json()) {
      json rows = json::array();
      for (const auto& row : c.rows) {
        rows.push_back({{"orders", row.orders},
                        {"formula", print_formula(row.formula, h->signature())},
                        {"value_size", row.value_size},
                        {"single_orbit", row.single_orbit}});
      }
      out_ << json{{"algebra", h->name()},
                   {"sort", sort.names()},
                   {"formulas", c.formula_count},
                   {"orbits", c.orbit_count},
                   {"every_value_is_one_orbit", c.every_value_is_one_orbit},
                   {"orbits_exhausted", c.orbits_exhausted},
                   {"ok", c.ok()},
                   {"rows", rows}}
                  .dump(2)
           << '\n';
    } else {
      std::vector<std::vector<std::string>> table{{"orders", "points", "one orbit", "formula"}};
      for (const auto& row : c.rows) {
        std::string orders;
        for (std::size_t i = 0; i < row.orders.size(); ++i) orders += (i ? "," : "") + std::to_string(row.orders[i]);
        table.push_back({orders, std::to_string(row.value_size), verdict(row.single_orbit),
                         print_formula(row.formula, h->signature())});
      }
      print_table(out_, table);
      out_ << "formulas: " << c.formula_count << ", orbits: " << c.orbit_count << '\n';
      out_ << "every value is one orbit: " << verdict(c.every_value_is_one_orbit)
           << ", orbits exhausted: " << verdict(c.orbits_exhausted) << '\n';
    }
    return strict(c.ok());
  }

  int axioms(const std::string& alg, const std::string& sort_text, std::size_t samples) {
    AlgebraPtr h = load(alg);
    VarSort sort = VarSort::parse(sort_text);
    AxiomReport report = run_axiom_suite(h, sort, samples, opts_.seed);
    if (opts_.as_json()) {
      json rows = json::array();
      for (const auto& r : report.results) {
        json row = {{"axiom", r.name}, {"instances", r.instances}, {"violations", r.violations}};
        if (r.violations) row["first_violation"] = r.first_violation;
        rows.push_back(row);
      }
      out_ << json{{"algebra", report.algebra}, {"sort", sort.names()}, {"seed", opts_.seed},
                   {"results", rows}, {"violations", report.total_violations()}}
                  .dump(2)
           << '\n';
    } else {
      std::vector<std::vector<std::string>> table{{"axiom", "instances", "violations"}};
      for (const auto& r : report.results) {
        table.push_back({r.name, std::to_string(r.instances), std::to_string(r.violations)});
      }
      print_table(out_, table);
      for (const auto& r : report.results) {
        if (r.violations) out_ << "first violation of " << r.name << ": " << r.first_violation << '\n';
      }
      out_ << "violations: " << report.total_violations() << '\n';
    }
    return strict(report.ok());
  }

  int zline_isotyped(const std::vector<std::string>& tuples) {
    if (tuples.size() != 2) throw Error("zline isotyped expects two tuples: <a> -- <b>");
    auto a = zline::parse_zpoint(tuples[0]);
    auto b = zline::parse_zpoint(tuples[1]);
    auto r = zline::z_isotyped(a, b);
    if (opts_.as_json()) {
      json doc = {{"a", a}, {"b", b}, {"isotyped", r.isotyped}};
      if (r.witness) {
        doc["witness"] = r.witness->to_string();
        doc["holds_at"] = r.holds_at == 1 ? a : b;
      }
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << verdict(r.isotyped) << '\n';
      if (r.witness) {
        out_ << "witness: " << r.witness->to_string() << '\n';
        out_ << "holds at: " << zline::format_zpoint(r.holds_at == 1 ? a : b) << '\n';
      }
    }
    return strict(r.isotyped);
  }

 private:
  int strict(bool holds) const { return opts_.strict && !holds ? verdict_false : ok; }

  void emit_verdict(bool r) {
    if (opts_.as_json()) {
      out_ << json{{"holds", r}}.dump(2) << '\n';
    } else {
      out_ << verdict(r) << '\n';
    }
  }

  const Options& opts_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Logical geometry workbench for finite algebras", "logeo"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--guard-points", opts.guard_points, "Largest point space (default 2^24)");
  app.add_option("--guard-carrier", opts.guard_carrier, "Largest carrier (default 64)");
  app.add_option("--seed", opts.seed, "Seed for randomized suites");
  app.add_flag("--strict", opts.strict, "Exit 1 when a boolean verdict is false");

  std::string alg, alg2, sort, text, file, target;
  std::size_t samples = 500;
  unsigned p = 0, m = 0, n = 0;
  std::vector<std::string> tuples;
  std::function<int(Commands&)> action;

  auto* eval = app.add_subcommand("eval", "Print the value set of a formula");
  eval->add_option("algebra", alg)->required();
  eval->add_option("sort", sort)->required();
  eval->add_option("formula", text)->required();
  eval->callback([&] { action = [&](Commands& c) { return c.eval(alg, sort, text); }; });

  auto* types = app.add_subcommand("types", "Type census: one row per realised type");
  types->add_option("algebra", alg)->required();
  types->add_option("sort", sort)->required();
  types->callback([&] { action = [&](Commands& c) { return c.types(alg, sort); }; });

  auto* parts = app.add_subcommand("partitions", "tau, rho and orbit partitions with the chain check");
  parts->add_option("algebra", alg)->required();
  parts->add_option("sort", sort)->required();
  parts->callback([&] { action = [&](Commands& c) { return c.partitions(alg, sort); }; });

  auto* perfect = app.add_subcommand("perfect", "Is rho equal to the orbit partition?");
  perfect->add_option("algebra", alg)->required();
  perfect->add_option("sort", sort)->required();
  perfect->callback([&] { action = [&](Commands& c) { return c.perfect(alg, sort); }; });

  auto* homog = app.add_subcommand("homogeneous", "Is tau equal to the orbit partition?");
  homog->add_option("algebra", alg)->required();
  homog->add_option("sort", sort)->required();
  homog->callback([&] { action = [&](Commands& c) { return c.homogeneous(alg, sort); }; });

  auto* iso = app.add_subcommand("isotyped", "Do two algebras realise the same types?");
  iso->add_option("algebra1", alg)->required();
  iso->add_option("algebra2", alg2)->required();
  iso->add_option("sort", sort)->required();
  iso->callback([&] { action = [&](Commands& c) { return c.isotyped_cmd(alg, alg2, sort); }; });

  auto* closure = app.add_subcommand("closure", "Does the system in a formula file imply a formula?");
  closure->add_option("algebra", alg)->required();
  closure->add_option("sort", sort)->required();
  closure->add_option("formula-file", file)->required();
  closure->add_option("formula", text)->required();
  closure->callback([&] { action = [&](Commands& c) { return c.closure(alg, sort, file, text); }; });

  auto* quasi = app.add_subcommand("quasi", "Does a quasi-identity hold? Equations separated by ';'");
  quasi->add_option("algebra", alg)->required();
  quasi->add_option("sort", sort)->required();
  quasi->add_option("equations", text)->required();
  quasi->add_option("target", target)->required();
  quasi->callback([&] { action = [&](Commands& c) { return c.quasi(alg, sort, text, target); }; });

  auto* query = app.add_subcommand("query", "Run a batch file of CLOSURE? and QUASI? lines");
  query->add_option("algebra", alg)->required();
  query->add_option("sort", sort)->required();
  query->add_option("file", file)->required();
  query->callback([&] { action = [&](Commands& c) { return c.query(alg, sort, file); }; });

  auto* census = app.add_subcommand("census", "Orbit censuses");
  census->require_subcommand(1);
  auto* exp = census->add_subcommand("exp-p", "Kernel formulas of (Z/p)^m over n variables");
  exp->add_option("p", p)->required();
  exp->add_option("m", m)->required();
  exp->add_option("n", n)->required();
  exp->callback([&] { action = [&](Commands& c) { return c.census_exp(p, m, n); }; });
  auto* orders = census->add_subcommand("orders", "Order formulas of a square-free abelian group");
  orders->add_option("algebra", alg)->required();
  orders->add_option("sort", sort)->required();
  orders->callback([&] { action = [&](Commands& c) { return c.census_orders(alg, sort); }; });

  auto* axioms = app.add_subcommand("axioms", "Randomised quantifier, equality and substitution axioms");
  axioms->add_option("algebra", alg)->required();
  axioms->add_option("sort", sort)->required();
  axioms->add_option("--samples", samples, "Instances per axiom")->capture_default_str();
  axioms->callback([&] { action = [&](Commands& c) { return c.axioms(alg, sort, samples); }; });

  auto* zl = app.add_subcommand("zline", "Integer tuples in the infinite cyclic group");
  zl->require_subcommand(1);
  auto* ziso = zl->add_subcommand("isotyped", "Compare the types of two integer tuples: <a> -- <b>");
  ziso->add_option("tuples", tuples)->expected(2);
  ziso->callback([&] { action = [&](Commands& c) { return c.zline_isotyped(tuples); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  if (!action) {
    err << app.help();
    return usage;
  }
  try {
    GuardScope scope(opts);
    Commands commands(opts, out);
    return action(commands);
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return guard_exceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace logeo::cli
