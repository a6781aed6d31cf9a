#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modgraph/graph.hpp"
#include "modgraph/solver.hpp"

namespace modgraph::graph {

/// Vertices containing the simple submodule at vertex v. Throws InvalidInput
/// when v is not simple.
std::vector<std::size_t> overline(const IntersectionGraph& g, std::size_t v);

/// Outcome of one of the explicit coloring constructions. Either a proper
/// coloring, or a description of why the construction does not apply; never
/// an improper coloring.
struct ConstructionResult {
  std::optional<Coloring> coloring;
  std::string failure;                 // empty on success
  std::vector<std::size_t> witness;    // vertices involved in the failure
  std::vector<std::size_t> selection;  // the overline N or clique C used
  bool applicable() const { return coloring.has_value(); }
};

/// True when Soc(M) = S + S' with S, S' isomorphic simples and Soc(M)
/// essential in M.
bool has_homogeneous_length_two_socle(const modules::Lattice& lat);

/// Colors G(M) from the overline of a simple N with the largest overline:
/// its members get distinct colors, and for every other simple N1 the members
/// of overline(N1) not containing Soc(M) reuse colors of overline(N) minus
/// the submodules containing Soc(M).
ConstructionResult color_by_overline(const IntersectionGraph& g);

/// Colors the complement of G(M) by f(N) = min{t : N meets U_t} for a greedy
/// maximal clique {U_t} of uniform vertices (canonical order).
ConstructionResult color_complement_by_uniform_clique(const IntersectionGraph& g);

}  // namespace modgraph::graph
