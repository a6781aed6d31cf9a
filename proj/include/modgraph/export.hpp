#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "modgraph/graph.hpp"

namespace modgraph::graph {

/// {order, vertices:[{id, generators, size}], edges:[[i,j]...], invariants:{...}}
/// with the cheap invariants (edge count, shape, connectivity) only.
nlohmann::json graph_json(const IntersectionGraph& g);

std::string to_dot(const IntersectionGraph& g);
std::string to_json(const IntersectionGraph& g);

/// format is "dot" or "json"; anything else throws InvalidInput.
std::string export_graph(const IntersectionGraph& g, std::string_view format);

}  // namespace modgraph::graph
