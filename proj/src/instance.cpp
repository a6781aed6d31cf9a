#include "modgraph/instance.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "modgraph/errors.hpp"

namespace modgraph::spec {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput("spec " + where + ": " + what);
}

void require_object(const json& j, const std::string& where, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) fail(where, "unknown field '" + key + "'");
  for (const auto& key : required)
    if (!j.contains(key)) fail(where, "missing field '" + key + "'");
}

std::uint64_t require_uint(const json& j, const std::string& where, std::uint64_t lo, std::uint64_t hi) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(where, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v < lo || v > hi) fail(where, "value " + std::to_string(v) + " out of range");
  return v;
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

json normalize_table(const json& j, const std::string& where, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || (rows && j.size() != rows)) fail(where, "expected an array of " + std::to_string(rows) + " rows");
  json out = json::array();
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    const std::size_t width = cols ? cols : j.size();
    if (!row.is_array() || row.size() != width) fail(where, "row " + std::to_string(r) + " has the wrong length");
    json nrow = json::array();
    for (std::size_t c = 0; c < row.size(); ++c)
      nrow.push_back(require_uint(row[c], where + "[" + std::to_string(r) + "]", 0, width - 1));
    out.push_back(std::move(nrow));
  }
  return out;
}

json normalize_field(const json& j, const std::string& where) {
  require_object(j, where, {"p", "k"}, {"p", "k"});
  return {{"p", require_uint(j["p"], where + ".p", 2, 1u << 20)}, {"k", require_uint(j["k"], where + ".k", 1, 64)}};
}

json normalize_ring(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) fail(where, "expected an object with a 'kind'");
  const std::string kind = require_string(j["kind"], where + ".kind");
  if (kind == "zmod") {
    require_object(j, where, {"kind", "n"}, {"n"});
    return {{"kind", kind}, {"n", require_uint(j["n"], where + ".n", 2, 1u << 20)}};
  }
  if (kind == "gf") {
    require_object(j, where, {"kind", "p", "k"}, {"p", "k"});
    return {{"kind", kind},
            {"p", require_uint(j["p"], where + ".p", 2, 1u << 20)},
            {"k", require_uint(j["k"], where + ".k", 1, 64)}};
  }
  if (kind == "matrix") {
    require_object(j, where, {"kind", "field", "dim"}, {"field", "dim"});
    return {{"kind", kind},
            {"field", normalize_field(j["field"], where + ".field")},
            {"dim", require_uint(j["dim"], where + ".dim", 1, 8)}};
  }
  if (kind == "triangular") {
    require_object(j, where, {"kind", "field", "sub_degree"}, {"field", "sub_degree"});
    return {{"kind", kind},
            {"field", normalize_field(j["field"], where + ".field")},
            {"sub_degree", require_uint(j["sub_degree"], where + ".sub_degree", 1, 64)}};
  }
  if (kind == "product") {
    require_object(j, where, {"kind", "factors"}, {"factors"});
    const auto& f = j["factors"];
    if (!f.is_array() || f.size() < 2) fail(where + ".factors", "expected at least two rings");
    json factors = json::array();
    for (std::size_t i = 0; i < f.size(); ++i)
      factors.push_back(normalize_ring(f[i], where + ".factors[" + std::to_string(i) + "]"));
    return {{"kind", kind}, {"factors", std::move(factors)}};
  }
  if (kind == "poly_quot") {
    require_object(j, where, {"kind", "p", "vars", "relations"}, {"p", "vars", "relations"});
    json vars = json::array(), rels = json::array();
    if (!j["vars"].is_array() || j["vars"].empty()) fail(where + ".vars", "expected a non-empty array");
    for (const auto& v : j["vars"]) vars.push_back(require_string(v, where + ".vars"));
    if (!j["relations"].is_array()) fail(where + ".relations", "expected an array");
    for (const auto& r : j["relations"]) rels.push_back(require_string(r, where + ".relations"));
    return {{"kind", kind}, {"p", require_uint(j["p"], where + ".p", 2, 1u << 20)}, {"vars", vars}, {"relations", rels}};
  }
  if (kind == "table") {
    require_object(j, where, {"kind", "add", "mul"}, {"add", "mul"});
    json add = normalize_table(j["add"], where + ".add", 0, 0);
    json mul = normalize_table(j["mul"], where + ".mul", add.size(), add.size());
    return {{"kind", kind}, {"add", std::move(add)}, {"mul", std::move(mul)}};
  }
  fail(where + ".kind", "unknown ring kind '" + kind + "'");
}

json normalize_module(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) fail(where, "expected an object with a 'kind'");
  const std::string kind = require_string(j["kind"], where + ".kind");
  if (kind == "regular") {
    require_object(j, where, {"kind"}, {});
    return {{"kind", kind}};
  }
  if (kind == "direct_sum") {
    require_object(j, where, {"kind", "summands"}, {"summands"});
    const auto& s = j["summands"];
    if (!s.is_array() || s.size() < 2) fail(where + ".summands", "expected at least two modules");
    json summands = json::array();
    for (std::size_t i = 0; i < s.size(); ++i)
      summands.push_back(normalize_module(s[i], where + ".summands[" + std::to_string(i) + "]"));
    return {{"kind", kind}, {"summands", std::move(summands)}};
  }
  if (kind == "quotient") {
    require_object(j, where, {"kind", "of", "kernel_generators"}, {"of", "kernel_generators"});
    json gens = json::array();
    if (!j["kernel_generators"].is_array()) fail(where + ".kernel_generators", "expected an array");
    for (const auto& g : j["kernel_generators"])
      gens.push_back(require_uint(g, where + ".kernel_generators", 0, 0xffffffffu));
    return {{"kind", kind}, {"of", normalize_module(j["of"], where + ".of")}, {"kernel_generators", std::move(gens)}};
  }
  if (kind == "custom") {
    require_object(j, where, {"kind", "add", "act"}, {"add", "act"});
    json add = normalize_table(j["add"], where + ".add", 0, 0);
    json act = normalize_table(j["act"], where + ".act", 0, add.size());
    return {{"kind", kind}, {"add", std::move(add)}, {"act", std::move(act)}};
  }
  fail(where + ".kind", "unknown module kind '" + kind + "'");
}

const std::set<std::string> kCapKeys = {"max_ring_size", "max_module_size", "max_submodules", "max_exact_vertices"};

std::vector<std::uint32_t> flatten(const json& table) {
  std::vector<std::uint32_t> out;
  for (const auto& row : table)
    for (const auto& v : row) out.push_back(v.get<std::uint32_t>());
  return out;
}

algebra::FiniteField field_of(const json& f, const Caps& caps) {
  return algebra::gf_build(f["p"].get<std::uint32_t>(), f["k"].get<unsigned>(), caps);
}

algebra::FiniteRing build_ring(const json& j, const Caps& caps) {
  const std::string kind = j["kind"];
  if (kind == "zmod") {
    const auto n = j["n"].get<std::uint64_t>();
    if (n > caps.max_ring_size) throw CapExceeded("Z/" + std::to_string(n) + " exceeds max ring size");
    return algebra::ring_zmod(static_cast<std::uint32_t>(n), caps);
  }
  if (kind == "gf") return algebra::ring_gf(field_of(j, caps));
  if (kind == "matrix") return algebra::ring_matrix(field_of(j["field"], caps), j["dim"].get<unsigned>(), caps);
  if (kind == "triangular")
    return algebra::ring_triangular(field_of(j["field"], caps), j["sub_degree"].get<unsigned>(), caps);
  if (kind == "product") {
    auto acc = build_ring(j["factors"][0], caps);
    for (std::size_t i = 1; i < j["factors"].size(); ++i) acc = algebra::ring_product(acc, build_ring(j["factors"][i], caps), caps);
    return acc;
  }
  if (kind == "poly_quot")
    return algebra::ring_poly_quot(j["p"].get<std::uint32_t>(), j["vars"].get<std::vector<std::string>>(),
                                   j["relations"].get<std::vector<std::string>>(), caps);
  const auto n = static_cast<std::uint32_t>(j["add"].size());
  if (n > caps.max_ring_size) throw CapExceeded("table ring exceeds max ring size");
  algebra::RingInfo info;
  info.backend = algebra::RingBackend::table;
  info.name = "table(" + std::to_string(n) + ")";
  return algebra::FiniteRing::from_tables(n, flatten(j["add"]), flatten(j["mul"]), info, {}, {}, caps);
}

modules::FiniteModule build_module(const json& j, const std::shared_ptr<const algebra::FiniteRing>& ring,
                                   const Caps& caps) {
  const std::string kind = j["kind"];
  if (kind == "regular") {
    if (ring->size() > caps.max_module_size) throw CapExceeded("regular module exceeds max module size");
    return modules::regular_module(ring, caps);
  }
  if (kind == "direct_sum") {
    auto acc = build_module(j["summands"][0], ring, caps);
    for (std::size_t i = 1; i < j["summands"].size(); ++i) {
      auto next = build_module(j["summands"][i], ring, caps);
      if (std::uint64_t{acc.size()} * next.size() > caps.max_module_size)
        throw CapExceeded("direct sum exceeds max module size");
      acc = modules::direct_sum(acc, next, caps);
    }
    return acc;
  }
  if (kind == "quotient") {
    auto of = build_module(j["of"], ring, caps);
    const auto gens = j["kernel_generators"].get<std::vector<std::uint32_t>>();
    for (auto g : gens)
      if (g >= of.size()) fail("module.kernel_generators", "element " + std::to_string(g) + " out of range");
    const auto kernel = modules::submodule_generated(of, gens);
    return modules::quotient(of, kernel.members, caps).module;
  }
  const auto m = static_cast<std::uint32_t>(j["add"].size());
  if (m > caps.max_module_size) throw CapExceeded("custom module exceeds max module size");
  if (j["act"].size() != ring->size()) fail("module.act", "expected one row per ring element");
  return modules::FiniteModule::from_tables(ring, m, flatten(j["add"]), flatten(j["act"]), "custom(" + std::to_string(m) + ")",
                                            {}, caps);
}

std::string module_suffix(const json& m) {
  const std::string kind = m["kind"];
  if (kind == "direct_sum" && m["summands"].size() == 2 && m["summands"][0] == m["summands"][1] &&
      m["summands"][0]["kind"] == "regular")
    return "selfsum";
  return kind;
}

}  // namespace

json normalize(const json& spec) {
  require_object(spec, "root", {"version", "ring", "module", "caps"}, {"version", "ring"});
  if (!spec["version"].is_number_integer() || spec["version"].get<std::int64_t>() != 1)
    fail("version", "only version 1 is supported");
  json out;
  out["version"] = 1;
  out["ring"] = normalize_ring(spec["ring"], "ring");
  out["module"] = spec.contains("module") ? normalize_module(spec["module"], "module") : json{{"kind", "regular"}};
  if (spec.contains("caps")) {
    require_object(spec["caps"], "caps", kCapKeys, {});
    json caps = json::object();
    for (const auto& [key, value] : spec["caps"].items()) caps[key] = require_uint(value, "caps." + key, 1, 1u << 30);
    if (!caps.empty()) out["caps"] = std::move(caps);
  }
  return out;
}

std::string serialize(const json& normalized) { return normalized.dump(); }

std::string canonical_id(const json& normalized) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize(normalized)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Caps effective_caps(const json& normalized, Caps base) {
  if (normalized.contains("caps")) {
    std::string text;
    for (const auto& [key, value] : normalized["caps"].items())
      text += (text.empty() ? "" : ",") + key + "=" + std::to_string(value.get<std::uint64_t>());
    base.apply_overrides(text);
  }
  return base;
}

Instance build(const json& spec, const Caps& base, std::string name, bool use_spec_caps) {
  Instance inst;
  inst.spec = normalize(spec);
  inst.id = canonical_id(inst.spec);
  inst.caps = use_spec_caps ? effective_caps(inst.spec, base) : base;
  inst.ring = std::make_shared<const algebra::FiniteRing>(build_ring(inst.spec["ring"], inst.caps));
  inst.module = std::make_shared<const modules::FiniteModule>(build_module(inst.spec["module"], inst.ring, inst.caps));
  inst.name = name.empty() ? inst.ring->name() + "/" + module_suffix(inst.spec["module"]) : std::move(name);
  return inst;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("spec is not valid JSON: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

json zmod(std::uint32_t n) { return {{"kind", "zmod"}, {"n", n}}; }
json gf(std::uint32_t p, unsigned k) { return {{"kind", "gf"}, {"p", p}, {"k", k}}; }
json matrix(std::uint32_t p, unsigned k, unsigned dim) {
  return {{"kind", "matrix"}, {"field", {{"p", p}, {"k", k}}}, {"dim", dim}};
}
json triangular(std::uint32_t p, unsigned k, unsigned sub_degree) {
  return {{"kind", "triangular"}, {"field", {{"p", p}, {"k", k}}}, {"sub_degree", sub_degree}};
}
json product(json a, json b) { return {{"kind", "product"}, {"factors", {std::move(a), std::move(b)}}}; }
json poly_quot(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> relations) {
  return {{"kind", "poly_quot"}, {"p", p}, {"vars", std::move(vars)}, {"relations", std::move(relations)}};
}
json regular() { return {{"kind", "regular"}}; }
json direct_sum(json a, json b) { return {{"kind", "direct_sum"}, {"summands", {std::move(a), std::move(b)}}}; }
json quotient(json of, std::vector<std::uint32_t> kernel_generators) {
  return {{"kind", "quotient"}, {"of", std::move(of)}, {"kernel_generators", std::move(kernel_generators)}};
}
json instance(json ring, json module) { return {{"version", 1}, {"ring", std::move(ring)}, {"module", std::move(module)}}; }

}  // namespace modgraph::spec
