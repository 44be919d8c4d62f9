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

#include "logeo/algebra_io.hpp"

#include <fstream>

#include "logeo/error.hpp"

namespace logeo {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw AlgebraError("schema error: " + what); }

void flatten(const json& node, std::size_t depth, std::size_t carrier, const std::string& sym,
             std::vector<Element>& out) {
  if (depth == 0) {
    if (!node.is_number_integer()) schema_error("table '" + sym + "' has a non-integer entry");
    const auto v = node.get<std::int64_t>();
    if (v < 0) {
      throw AlgebraError("entry out of range in table '" + sym + "': " + std::to_string(v));
    }
    out.push_back(static_cast<Element>(v));
    return;
  }
  if (!node.is_array()) schema_error("table '" + sym + "' is not nested " + std::to_string(depth) + " deep");
  if (node.size() != carrier) {
    schema_error("table '" + sym + "' is not total: row of length " + std::to_string(node.size()) +
                 ", carrier " + std::to_string(carrier));
  }
  for (const auto& child : node) flatten(child, depth - 1, carrier, sym, out);
}

Variety parse_variety(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "generic") return Variety::generic();
    if (s == "group") return Variety::group();
    if (s == "abelian_group") return Variety::abelian_group();
    schema_error("unknown variety '" + s + "'");
  }
  if (v.is_object() && v.contains("abelian_exponent_p") && v["abelian_exponent_p"].is_number_integer()) {
    const auto p = v["abelian_exponent_p"].get<std::int64_t>();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) schema_error("exponent " + std::to_string(p) + " is not prime");
    return Variety::abelian_exponent(static_cast<unsigned>(p));
  }
  schema_error("variety must be a string or {\"abelian_exponent_p\": p}");
}

}  // namespace

FiniteAlgebra load_algebra(const json& doc) {
  if (!doc.is_object()) schema_error("document is not an object");
  for (const char* key : {"name", "signature", "carrier", "tables"}) {
    if (!doc.contains(key)) schema_error(std::string("missing '") + key + "'");
  }
  if (!doc["name"].is_string()) schema_error("'name' must be a string");
  if (!doc["carrier"].is_number_integer() || doc["carrier"].get<std::int64_t>() <= 0) {
    schema_error("'carrier' must be a positive integer");
  }
  const auto carrier = static_cast<std::size_t>(doc["carrier"].get<std::int64_t>());
  const auto& sigdoc = doc["signature"];
  if (!sigdoc.is_object() || !sigdoc.contains("ops") || !sigdoc["ops"].is_array()) {
    schema_error("'signature.ops' must be an array");
  }
  std::vector<OpSymbol> ops;
  for (const auto& op : sigdoc["ops"]) {
    if (!op.is_object() || !op.contains("sym") || !op["sym"].is_string() || !op.contains("arity") ||
        !op["arity"].is_number_integer() || op["arity"].get<std::int64_t>() < 0) {
      schema_error("each op needs a string 'sym' and a nonnegative 'arity'");
    }
    ops.push_back({op["sym"].get<std::string>(), static_cast<std::size_t>(op["arity"].get<std::int64_t>())});
  }
  std::optional<std::string> infix;
  if (sigdoc.contains("infix") && !sigdoc["infix"].is_null()) {
    if (!sigdoc["infix"].is_string()) schema_error("'signature.infix' must be a string");
    infix = sigdoc["infix"].get<std::string>();
  }
  const Variety variety = doc.contains("variety") ? parse_variety(doc["variety"]) : Variety::generic();
  const std::string name = doc["name"].get<std::string>();
  Signature sig(sigdoc.value("name", name), ops, infix, variety);

  const auto& tabdoc = doc["tables"];
  if (!tabdoc.is_object()) schema_error("'tables' must be an object");
  std::vector<std::vector<Element>> tables;
  for (const auto& op : ops) {
    if (!tabdoc.contains(op.sym)) schema_error("missing table for '" + op.sym + "'");
    std::vector<Element> flat;
    const auto& t = tabdoc[op.sym];
    if (op.arity == 0 && t.is_array()) {
      if (t.size() != 1) schema_error("constant '" + op.sym + "' must be a single element");
      flatten(t[0], 0, carrier, op.sym, flat);
    } else {
      flatten(t, op.arity, carrier, op.sym, flat);
    }
    tables.push_back(std::move(flat));
  }
  return FiniteAlgebra(name, std::move(sig), carrier, std::move(tables));
}

FiniteAlgebra load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open algebra file '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON in '") + path.string() + "': " + e.what());
  }
  return load_algebra(doc);
}

json to_json(const FiniteAlgebra& h) {
  const auto& sig = h.signature();
  json ops = json::array();
  for (const auto& op : sig.ops()) ops.push_back({{"sym", op.sym}, {"arity", op.arity}});
  json signature = {{"ops", ops}};
  if (sig.infix()) signature["infix"] = sig.op(*sig.infix()).sym;
  json variety;
  if (sig.variety().kind == Variety::Kind::abelian_exponent_p) {
    variety = {{"abelian_exponent_p", sig.variety().p}};
  } else {
    variety = sig.variety().to_string();
  }
  json tables = json::object();
  const std::size_t m = h.size();
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    const auto& flat = h.table(op);
    const std::size_t arity = sig.op(op).arity;
    if (arity == 0) {
      tables[sig.op(op).sym] = flat[0];
      continue;
    }
    std::function<json(std::size_t, std::size_t)> nest = [&](std::size_t depth, std::size_t offset) -> json {
      json arr = json::array();
      std::size_t step = 1;
      for (std::size_t k = 1; k < depth; ++k) step *= m;
      for (std::size_t i = 0; i < m; ++i) {
        if (depth == 1) {
          arr.push_back(flat[offset + i]);
        } else {
          arr.push_back(nest(depth - 1, offset + i * step));
        }
      }
      return arr;
    };
    tables[sig.op(op).sym] = nest(arity, 0);
  }
  return {{"name", h.name()}, {"signature", signature}, {"variety", variety}, {"carrier", m}, {"tables", tables}};
}

namespace {

std::optional<std::size_t> number_after(const std::string& s, std::size_t prefix) {
  if (s.size() <= prefix) return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = prefix; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(s[i] - '0');
    if (v > 1'000'000) return std::nullopt;
  }
  return v;
}

std::optional<FiniteAlgebra> builtin(const std::string& name) {
  if (name == "trivial") return cyclic(1);
  if (name == "s3") return symmetric3();
  if (name == "q8") return quaternion();
  if (name.rfind("el", 0) == 0) {
    auto us = name.find('_');
    if (us != std::string::npos) {
      auto p = number_after(name.substr(0, us), 2);
      auto m = number_after(name.substr(us + 1), 0);
      if (p && m) return elementary_abelian(static_cast<unsigned>(*p), static_cast<unsigned>(*m));
    }
    return std::nullopt;
  }
  if (name[0] == 'd') {
    if (auto n = number_after(name, 1)) return dihedral(*n);
    return std::nullopt;
  }
  if (name[0] == 'z') {
    std::optional<FiniteAlgebra> acc;
    std::size_t start = 0;
    while (start <= name.size()) {
      auto end = name.find('x', start);
      auto part = name.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (part.empty() || part[0] != 'z') return std::nullopt;
      auto n = number_after(part, 1);
      if (!n) return std::nullopt;
      auto factor = cyclic(*n);
      acc = acc ? direct_product(*acc, factor) : factor;
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return acc;
  }
  return std::nullopt;
}

}  // namespace

AlgebraPtr resolve_algebra(const std::string& name) {
  if (name.empty()) throw AlgebraError("empty algebra name");
  if (auto h = builtin(name)) return std::make_shared<const FiniteAlgebra>(std::move(*h));
  if (std::filesystem::exists(name)) return std::make_shared<const FiniteAlgebra>(load_algebra_file(name));
  throw AlgebraError("unknown algebra '" + name + "' (not a built-in name or a readable file)");
}

std::vector<AlgebraPtr> menu_groups(std::size_t max_order) {
  static const char* names[] = {"trivial", "z2", "z3", "z4", "z2xz2", "z5", "z6", "z2xz3",
                                "s3", "z7", "z8", "z2xz4", "z2xz2xz2", "d4", "q8"};
  std::vector<AlgebraPtr> out;
  for (const char* n : names) {
    auto h = resolve_algebra(n);
    if (h->size() <= max_order) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace logeo
