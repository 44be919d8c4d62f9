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

#include <sstream>

#include "cli.hpp"
#include "logeo/guards.hpp"
#include "support.hpp"

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = logeo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("eval prints the value set") {
  Run r = run({"eval", "z4", "x", "x*x == e"});
  CHECK(r.code == 0);
  CHECK(r.out == "{0, 2}\n");
  Run j = run({"--format", "json", "eval", "z4", "x", "x*x == e"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["value"]["count"] == 2);
  CHECK(doc["value"]["hex"] == "5");
}

TEST_CASE("verdicts and witnesses") {
  Run r = run({"isotyped", "z4", "z2xz2", "x"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "false\n"));
  CHECK(has(r.out, "witness: E x. !(x*x == e)"));
  CHECK(has(r.out, "holds in: z4"));
  CHECK(run({"--strict", "isotyped", "z4", "z2xz2", "x"}).code == logeo::cli::verdict_false);
  CHECK(run({"isotyped", "z6", "z2xz3", "x,y"}).out == "true\n");
  CHECK(run({"homogeneous", "z2xz4", "x"}).out.rfind("false", 0) == 0);
  CHECK(run({"perfect", "z2xz4", "x"}).out.rfind("true", 0) == 0);
  Run p = run({"--format", "json", "partitions", "z2xz4", "x"});
  auto doc = nlohmann::json::parse(p.out);
  CHECK(doc["classes"]["tau"] == 3);
  CHECK(doc["classes"]["rho"] == 4);
  CHECK(doc["classes"]["orbit"] == 4);
  CHECK(doc["chain"]["rho_in_tau"] == true);
  CHECK(run({"homogeneous", "z2xz4"}).code == logeo::cli::usage);
}

TEST_CASE("types and censuses") {
  Run t = run({"types", "z30", "x"});
  CHECK(t.code == 0);
  Run orders = run({"census", "orders", "z30", "x"});
  CHECK(orders.code == 0);
  CHECK(has(orders.out, "x == e"));
  CHECK(!has(orders.out, "false"));
  Run exp = run({"census", "exp-p", "2", "2", "2"});
  CHECK(exp.code == 0);
  CHECK(has(exp.out, "<(1,1)>"));
  Run ax = run({"axioms", "z4", "x", "--samples", "20"});
  CHECK(ax.code == 0);
}

TEST_CASE("closure, quasi and batch queries") {
  std::string formulas = testing::data("order2.formulas");
  CHECK(run({"closure", "z4", "x", formulas, "x*x*x == x"}).out == "true\n");
  CHECK(run({"closure", "z4", "x", formulas, "x == e"}).out.rfind("false", 0) == 0);
  CHECK(run({"quasi", "z4", "x", "x*x == e", "x == e"}).out.rfind("false", 0) == 0);
  CHECK(run({"quasi", "z2", "x1,x2", "x1*x2 == e", "x1 == x2"}).out == "true\n");
  Run q = run({"query", "z4", "x", testing::data("queries.txt")});
  CHECK(q.code == 0);
  CHECK(has(q.out, "line 2:  true"));
  CHECK(has(q.out, "line 3:  false"));
  CHECK(has(q.out, "line 5:  true"));
}

TEST_CASE("zline") {
  CHECK(run({"zline", "isotyped", "--", "2,-4", "-2,4"}).out == "true\n");
  Run r = run({"zline", "isotyped", "--", "1,2", "2,1"});
  CHECK(r.out.rfind("false\n", 0) == 0);
  CHECK(has(r.out, "witness: E y. x1 == y & x2 == y*y"));
  CHECK(run({"zline", "isotyped", "--", "1,2", "3"}).code == logeo::cli::usage);
  CHECK(run({"zline", "isotyped", "--", "1,9999999", "1,2"}).code == logeo::cli::guard_exceeded);
}

TEST_CASE("errors and guards") {
  CHECK(run({}).code == logeo::cli::usage);
  CHECK(run({"bogus"}).code == logeo::cli::usage);
  Run missing = run({"eval", "nosuch", "x", "x == e"});
  CHECK(missing.code == logeo::cli::usage);
  CHECK(has(missing.err, "unknown algebra"));
  CHECK(run({"eval", "z4", "x", "x = e"}).code == logeo::cli::usage);
  CHECK(run({"eval", testing::data("bad_not_associative.json"), "x", "x == x"}).code == logeo::cli::usage);
  Run big = run({"--guard-points", "10", "eval", "z4", "x,y,z", "x == y"});
  CHECK(big.code == logeo::cli::guard_exceeded);
  CHECK(has(big.err, "guard"));
  CHECK(run({"--guard-carrier", "4", "eval", "z8", "x", "x == e"}).code == logeo::cli::guard_exceeded);
  // Guards set for one command do not leak into the next.
  CHECK(logeo::Guards::defaults().max_points == logeo::Guards{}.max_points);
  CHECK(run({"eval", "z4", "x,y,z", "x == y"}).code == 0);
}
