#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "modgraph/caps.hpp"
#include "modgraph/module.hpp"
#include "modgraph/ring.hpp"

namespace modgraph::spec {

/// Instance files are JSON objects
///   {"version": 1, "ring": RING, "module": MODULE, "caps": {...}}
/// with
///   RING   = {"kind": "zmod", "n": N}
///          | {"kind": "gf", "p": P, "k": K}
///          | {"kind": "matrix", "field": {"p": P, "k": K}, "dim": D}
///          | {"kind": "triangular", "field": {"p": P, "k": K}, "sub_degree": J}
///          | {"kind": "product", "factors": [RING, RING, ...]}
///          | {"kind": "poly_quot", "p": P, "vars": [...], "relations": [...]}
///          | {"kind": "table", "add": [[...]], "mul": [[...]]}
///   MODULE = {"kind": "regular"}
///          | {"kind": "direct_sum", "summands": [MODULE, MODULE, ...]}
///          | {"kind": "quotient", "of": MODULE, "kernel_generators": [...]}
///          | {"kind": "custom", "add": [[...]], "act": [[...]]}
/// "module" defaults to regular and "caps" is optional. Unknown fields are
/// rejected.

/// Validates a spec and returns its normal form (defaults filled in). Throws
/// InvalidInput on schema violations.
nlohmann::json normalize(const nlohmann::json& spec);

/// Compact dump with sorted keys; stable for a normalized spec.
std::string serialize(const nlohmann::json& normalized);

/// FNV-1a 64 of serialize(normalized), as 16 hex digits.
std::string canonical_id(const nlohmann::json& normalized);

/// base with the spec's "caps" overrides applied.
Caps effective_caps(const nlohmann::json& normalized, Caps base);

struct Instance {
  std::string name;
  std::string id;
  nlohmann::json spec;  // normalized
  Caps caps;
  std::shared_ptr<const algebra::FiniteRing> ring;
  std::shared_ptr<const modules::FiniteModule> module;
};

/// Normalizes and builds. The instance caps are effective_caps(spec, base)
/// unless use_spec_caps is false. An empty name is derived from the ring name
/// and module kind.
Instance build(const nlohmann::json& spec, const Caps& base = {}, std::string name = {}, bool use_spec_caps = true);

/// Parses JSON text; parse errors become InvalidInput.
nlohmann::json parse(const std::string& text);
nlohmann::json load_file(const std::string& path);

// Spec fragments used by the zoo and the tests.
nlohmann::json zmod(std::uint32_t n);
nlohmann::json gf(std::uint32_t p, unsigned k);
nlohmann::json matrix(std::uint32_t p, unsigned k, unsigned dim);
nlohmann::json triangular(std::uint32_t p, unsigned k, unsigned sub_degree);
nlohmann::json product(nlohmann::json a, nlohmann::json b);
nlohmann::json poly_quot(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> relations);
nlohmann::json regular();
nlohmann::json direct_sum(nlohmann::json a, nlohmann::json b);
nlohmann::json quotient(nlohmann::json of, std::vector<std::uint32_t> kernel_generators);
nlohmann::json instance(nlohmann::json ring, nlohmann::json module = regular());

}  // namespace modgraph::spec
