#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modgraph/bits.hpp"
#include "modgraph/caps.hpp"
#include "modgraph/lattice.hpp"

namespace modgraph::graph {

/// Simple undirected graph on vertices 0..order-1 with bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  std::size_t order() const { return adj_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bits& row(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  Graph complement() const;

 private:
  std::vector<Bits> adj_;
};

/// G(M): vertices are the nontrivial submodules of M in canonical order,
/// adjacent when their intersection is nonzero.
class IntersectionGraph {
 public:
  const modules::Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const modules::Lattice>& lattice_ptr() const { return lattice_; }
  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  /// Lattice index of vertex v.
  std::size_t submodule(std::size_t v) const { return v + 1; }
  /// Vertex of lattice index i, or npos for 0 and M.
  std::size_t vertex_of(std::size_t lattice_index) const;

  std::size_t degree(std::size_t v) const;
  std::size_t complement_degree(std::size_t v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend IntersectionGraph build_graph(std::shared_ptr<const modules::Lattice> lat);

 private:
  std::shared_ptr<const modules::Lattice> lattice_;
  Graph graph_;
};

IntersectionGraph build_graph(std::shared_ptr<const modules::Lattice> lat);

enum class ShapeTag { Null, Complete, Star, Other };
std::string to_string(ShapeTag t);

struct GraphShape {
  ShapeTag tag;
  std::size_t order;
  /// "N3", "K2", "S4", "other(7)".
  std::string symbol() const;
};

/// Null beats Complete beats Star where the definitions overlap (order <= 2).
GraphShape classify_shape(const Graph& g);

/// Shortest cycle length; nullopt when acyclic.
std::optional<std::size_t> girth(const Graph& g);
/// Largest distance; nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);
bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
/// First triangle in lexicographic order, if any.
std::optional<std::vector<std::size_t>> find_triangle(const Graph& g);

}  // namespace modgraph::graph
