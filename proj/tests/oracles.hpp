#pragma once

// Brute-force references used by the tests. Deliberately naive and
// independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "modgraph/graph.hpp"
#include "modgraph/module.hpp"

namespace oracle {

using Members = std::vector<std::uint32_t>;

inline bool closed(const modgraph::modules::FiniteModule& m, const std::vector<bool>& in) {
  if (!in[0]) return false;
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    if (!in[x]) continue;
    for (std::uint32_t y = 0; y < m.size(); ++y)
      if (in[y] && !in[m.add(x, y)]) return false;
    for (std::uint32_t r = 0; r < m.ring().size(); ++r)
      if (!in[m.act(r, x)]) return false;
  }
  return true;
}

inline Members to_members(const std::vector<bool>& in) {
  Members out;
  for (std::uint32_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

/// Every subset containing 0, tested for closure. Carriers up to 16.
inline std::set<Members> submodules_by_subsets(const modgraph::modules::FiniteModule& m) {
  const std::uint32_t n = m.size();
  std::set<Members> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<bool> in(n, false);
    in[0] = true;
    for (std::uint32_t i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1u;
    if (closed(m, in)) out.insert(to_members(in));
  }
  return out;
}

inline std::vector<bool> closure(const modgraph::modules::FiniteModule& m, std::vector<bool> in) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      if (!in[x]) continue;
      for (std::uint32_t y = 0; y < m.size(); ++y)
        if (in[y] && !in[m.add(x, y)]) in[m.add(x, y)] = grew = true;
      for (std::uint32_t r = 0; r < m.ring().size(); ++r)
        if (!in[m.act(r, x)]) in[m.act(r, x)] = grew = true;
    }
  }
  return in;
}

/// Include/exclude backtracking over elements with closure pruning; each
/// closed set is reached exactly once. Carriers up to 32 and beyond.
inline std::set<Members> submodules_by_backtracking(const modgraph::modules::FiniteModule& m) {
  const std::uint32_t n = m.size();
  std::set<Members> out;
  std::function<void(std::uint32_t, std::vector<bool>, std::vector<bool>)> go = [&](std::uint32_t i, std::vector<bool> in,
                                                                                   std::vector<bool> out_set) {
    for (std::uint32_t k = 0; k < n; ++k)
      if (in[k] && out_set[k]) return;
    if (i == n) {
      out.insert(to_members(in));
      return;
    }
    if (in[i]) {
      go(i + 1, std::move(in), std::move(out_set));
      return;
    }
    auto excluded = out_set;
    excluded[i] = true;
    go(i + 1, in, std::move(excluded));
    auto with = in;
    with[i] = true;
    go(i + 1, closure(m, std::move(with)), std::move(out_set));
  };
  std::vector<bool> zero(n, false);
  zero[0] = true;
  go(1, zero, std::vector<bool>(n, false));
  return out;
}

/// Number of subspaces of F_q^d.
inline std::uint64_t subspace_count(std::uint64_t q, unsigned d) {
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= d; ++k) {
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t a = 1, b = 1;
      for (unsigned e = 0; e < d - i; ++e) a *= q;
      for (unsigned e = 0; e < i + 1; ++e) b *= q;
      num *= a - 1;
      den *= b - 1;
    }
    total += num / den;
  }
  return total;
}

inline bool is_clique(const modgraph::graph::Graph& g, std::uint32_t mask) {
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if ((mask >> u & 1u) && (mask >> v & 1u) && !g.adjacent(u, v)) return false;
  return true;
}

inline std::size_t clique_number(const modgraph::graph::Graph& g) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask)
    if (is_clique(g, mask)) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  return best;
}

inline std::set<std::vector<std::size_t>> maximal_cliques(const modgraph::graph::Graph& g) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!is_clique(g, mask)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(mask >> v & 1u) && is_clique(g, mask | (1u << v))) maximal = false;
    if (!maximal) continue;
    std::vector<std::size_t> c;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) c.push_back(v);
    out.insert(c);
  }
  return out;
}

/// Smallest number of blocks in a partition into independent sets, by
/// enumerating restricted growth strings.
inline std::size_t chromatic_number(const modgraph::graph::Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::size_t best = n;
  std::vector<std::size_t> color(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t v, std::size_t used) {
    if (used >= best) return;
    if (v == n) {
      best = used;
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        if (color[u] == c && g.adjacent(u, v)) ok = false;
      if (!ok) continue;
      color[v] = c;
      go(v + 1, std::max(used, c + 1));
    }
  };
  go(0, 0);
  return best;
}

inline modgraph::graph::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  modgraph::graph::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
