#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modgraph/caps.hpp"
#include "modgraph/instance.hpp"

namespace modgraph::zoo {

/// A named, not yet built instance.
struct InstanceDef {
  std::string name;
  nlohmann::json spec;  // normalized
  std::string id;       // canonical id of spec

  spec::Instance build(const Caps& caps = {}) const { return spec::build(spec, caps, name); }
};

InstanceDef make_def(std::string name, const nlohmann::json& spec);

/// Hand-picked instances: matrix rings, triangular rings, chain rings,
/// local rings with square-zero radical, S+S modules and friends.
std::vector<InstanceDef> named_instances();

struct FamilyParams {
  std::size_t max_ring_size = 16;
  // R + R is included when |R|^2 is at most this (0 disables).
  std::size_t max_sum_size = 64;
};

/// "all", "empty", "regular", "triangle-free" or "socle-homogeneous-2".
struct InstanceFamily {
  std::string name;
  std::vector<InstanceDef> members;  // deterministic order

  auto begin() const { return members.begin(); }
  auto end() const { return members.end(); }
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

/// Every builder-expressible ring with at most params.max_ring_size elements
/// (Z/n, fields, matrix rings, triangular rings, truncated polynomial rings,
/// pairwise products) with its regular module and small self-sums, filtered.
/// Unknown filters throw InvalidInput; instances whose analysis hits a cap
/// are dropped by the graph filters.
InstanceFamily family(const std::string& filter, const FamilyParams& params = {}, const Caps& caps = {});

/// "named" or "family:<filter>:<max ring size>" (e.g. "family:all:16").
InstanceFamily resolve(const std::string& name, const Caps& caps = {});

}  // namespace modgraph::zoo
