#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modgraph/caps.hpp"
#include "modgraph/graph.hpp"

namespace modgraph::graph {

struct Clique {
  std::vector<std::size_t> vertices;  // ascending
  std::size_t size() const { return vertices.size(); }
};

/// A proper vertex coloring with colors 0..count-1.
struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t count = 0;
  std::string provenance;  // "exact", "greedy", "overline", "uniform-clique"
};

bool is_proper(const Graph& g, const Coloring& c);
/// Renumbers colors by first appearance so they are contiguous from 0.
void normalize(Coloring& c);

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
/// Throws CapExceeded when the order exceeds caps.max_exact_vertices.
Clique clique_number(const Graph& g, const Caps& caps = {});

/// Every maximal clique (Bron-Kerbosch with pivoting), each ascending, the
/// list sorted lexicographically.
std::vector<Clique> max_cliques(const Graph& g, const Caps& caps = {});

/// Greedy lower bound on the clique number, usable past the exact cap.
Clique greedy_clique(const Graph& g);
/// DSATUR greedy coloring.
Coloring greedy_coloring(const Graph& g);

/// Exact chromatic number with a witnessing coloring: DSATUR branch and bound
/// seeded with the greedy upper bound and the clique lower bound.
Coloring chromatic_number(const Graph& g, const Caps& caps = {});

}  // namespace modgraph::graph
