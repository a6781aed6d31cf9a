#pragma once

#include <initializer_list>
#include <memory>

#include "modgraph/graph.hpp"
#include "modgraph/instance.hpp"
#include "modgraph/lattice.hpp"

namespace support {

inline modgraph::spec::Instance build(const nlohmann::json& spec, const modgraph::Caps& caps = {}) {
  return modgraph::spec::build(spec, caps);
}

inline std::shared_ptr<const modgraph::modules::Lattice> lattice(const modgraph::spec::Instance& inst) {
  return std::make_shared<const modgraph::modules::Lattice>(modgraph::modules::enumerate_submodules(inst.module, inst.caps));
}

inline modgraph::graph::IntersectionGraph graph(const modgraph::spec::Instance& inst) {
  return modgraph::graph::build_graph(lattice(inst));
}

inline modgraph::Bits bits(std::size_t width, std::initializer_list<std::uint32_t> members) {
  modgraph::Bits b(width);
  for (auto m : members) b.set(m);
  return b;
}

/// Vertex of the submodule with the given members; npos if it is not a vertex.
inline std::size_t vertex(const modgraph::graph::IntersectionGraph& g, std::initializer_list<std::uint32_t> members) {
  const auto i = g.lattice().find(bits(g.lattice().module().size(), members));
  if (i == modgraph::modules::Lattice::npos) return modgraph::graph::IntersectionGraph::npos;
  return g.vertex_of(i);
}

}  // namespace support
