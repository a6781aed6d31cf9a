#include "modgraph/graph.hpp"

#include <deque>

#include "modgraph/errors.hpp"

namespace modgraph::graph {

Graph::Graph(std::size_t order) : adj_(order, Bits(order)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw InvalidInput("graph: loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : adj_) c += r.count();
  return c / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::complement() const {
  Graph c(order());
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

std::size_t IntersectionGraph::vertex_of(std::size_t lattice_index) const {
  if (lattice_index == 0 || lattice_index >= lattice_->full()) return npos;
  return lattice_index - 1;
}

std::size_t IntersectionGraph::degree(std::size_t v) const {
  if (v >= order()) throw InvalidInput("degree: unknown vertex " + std::to_string(v));
  return graph_.degree(v);
}

std::size_t IntersectionGraph::complement_degree(std::size_t v) const {
  if (v >= order()) throw InvalidInput("complement_degree: unknown vertex " + std::to_string(v));
  return order() - 1 - graph_.degree(v);
}

IntersectionGraph build_graph(std::shared_ptr<const modules::Lattice> lat) {
  IntersectionGraph ig;
  const auto& l = *lat;
  const std::size_t alpha = l.size() >= 2 ? l.size() - 2 : 0;
  ig.graph_ = Graph(alpha);
  for (std::size_t u = 0; u < alpha; ++u)
    for (std::size_t v = u + 1; v < alpha; ++v)
      if (l[u + 1].members.count_and(l[v + 1].members) > 1) ig.graph_.add_edge(u, v);
  ig.lattice_ = std::move(lat);
  return ig;
}

std::string to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::Null: return "null";
    case ShapeTag::Complete: return "complete";
    case ShapeTag::Star: return "star";
    case ShapeTag::Other: return "other";
  }
  return "other";
}

std::string GraphShape::symbol() const {
  const std::string n = std::to_string(order);
  switch (tag) {
    case ShapeTag::Null: return "N" + n;
    case ShapeTag::Complete: return "K" + n;
    case ShapeTag::Star: return "S" + n;
    case ShapeTag::Other: return "other(" + n + ")";
  }
  return n;
}

GraphShape classify_shape(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t e = g.edge_count();
  if (e == 0) return {ShapeTag::Null, n};
  if (e == n * (n - 1) / 2) return {ShapeTag::Complete, n};
  for (std::size_t c = 0; c < n; ++c)
    if (g.degree(c) == n - 1 && e == n - 1) return {ShapeTag::Star, n};
  return {ShapeTag::Other, n};
}

namespace {

std::vector<std::size_t> bfs(const Graph& g, std::size_t root) {
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.order(), inf);
  std::deque<std::size_t> q{root};
  dist[root] = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    g.row(u).for_each([&](std::size_t v) {
      if (dist[v] == inf) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    });
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> girth(const Graph& g) {
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::size_t best = inf;
  for (std::size_t root = 0; root < g.order(); ++root) {
    std::vector<std::size_t> dist(g.order(), inf), parent(g.order(), inf);
    std::deque<std::size_t> q{root};
    dist[root] = 0;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      g.row(u).for_each([&](std::size_t v) {
        if (dist[v] == inf) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      });
    }
  }
  if (best == inf) return std::nullopt;
  return best;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t root = 0; root < g.order(); ++root) {
    for (auto d : bfs(g, root)) {
      if (d == static_cast<std::size_t>(-1)) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  for (auto d : bfs(g, 0))
    if (d == static_cast<std::size_t>(-1)) return false;
  return true;
}

std::optional<std::vector<std::size_t>> find_triangle(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      for (std::size_t w = v + 1; w < g.order(); ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) return std::vector<std::size_t>{u, v, w};
    }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

}  // namespace modgraph::graph
