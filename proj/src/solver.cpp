#include "modgraph/solver.hpp"

#include <algorithm>
#include <functional>

#include "modgraph/errors.hpp"

namespace modgraph::graph {

namespace {

void require_exact(const Graph& g, const Caps& caps, const char* what) {
  if (g.order() > caps.max_exact_vertices)
    throw CapExceeded(std::string(what) + ": graph order " + std::to_string(g.order()) +
                      " exceeds max exact vertices " + std::to_string(caps.max_exact_vertices));
}

Bits all_vertices(std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i);
  return b;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    if (g_.order() == 0) return {};
    best_ = greedy_clique(g_).vertices;
    expand(all_vertices(g_.order()));
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(Bits candidates) {
    // Greedy sequential coloring gives, for each position, an upper bound on
    // the clique size reachable from the vertices up to that position.
    std::vector<std::size_t> order, bound;
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bits q = uncolored;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.and_not(g_.row(v));
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next = candidates & g_.row(v);
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& g_;
  std::vector<std::size_t> current_, best_;
};

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.color.size() != g.order()) return false;
  for (auto col : c.color)
    if (col >= c.count) return false;
  for (const auto& [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

void normalize(Coloring& c) {
  std::vector<std::uint32_t> remap;
  constexpr std::uint32_t unset = ~0u;
  std::uint32_t next = 0;
  for (auto& col : c.color) {
    if (col >= remap.size()) remap.resize(col + 1, unset);
    if (remap[col] == unset) remap[col] = next++;
    col = remap[col];
  }
  c.count = next;
}

Clique greedy_clique(const Graph& g) {
  Clique best;
  for (std::size_t start = 0; start < g.order(); ++start) {
    std::vector<std::size_t> cur{start};
    Bits cand = g.row(start);
    while (cand.any()) {
      // Pick the candidate with most neighbours inside the candidate set.
      std::size_t pick = cand.first(), most = 0;
      cand.for_each([&](std::size_t v) {
        const std::size_t d = cand.count_and(g.row(v));
        if (d > most) {
          most = d;
          pick = v;
        }
      });
      cur.push_back(pick);
      cand &= g.row(pick);
    }
    if (cur.size() > best.size()) {
      std::sort(cur.begin(), cur.end());
      best.vertices = cur;
    }
  }
  return best;
}

Clique clique_number(const Graph& g, const Caps& caps) {
  require_exact(g, caps, "clique_number");
  return Clique{CliqueSearch(g).run()};
}

std::vector<Clique> max_cliques(const Graph& g, const Caps& caps) {
  require_exact(g, caps, "max_cliques");
  std::vector<Clique> out;
  const std::size_t n = g.order();
  if (n == 0) return out;
  std::vector<std::size_t> r;
  std::function<void(Bits, Bits)> bk = [&](Bits p, Bits x) {
    if (p.none() && x.none()) {
      auto c = r;
      std::sort(c.begin(), c.end());
      out.push_back(Clique{std::move(c)});
      return;
    }
    Bits px = p | x;
    std::size_t pivot = px.first(), most = 0;
    px.for_each([&](std::size_t u) {
      const std::size_t d = p.count_and(g.row(u));
      if (d >= most) {
        if (d > most || u < pivot) pivot = u;
        most = d;
      }
    });
    Bits branch = p;
    branch.and_not(g.row(pivot));
    branch.for_each([&](std::size_t v) {
      r.push_back(v);
      bk(p & g.row(v), x & g.row(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  };
  bk(all_vertices(n), Bits(n));
  std::sort(out.begin(), out.end(), [](const Clique& a, const Clique& b) { return a.vertices < b.vertices; });
  return out;
}

Coloring greedy_coloring(const Graph& g) {
  const std::size_t n = g.order();
  Coloring c;
  c.provenance = "greedy";
  constexpr std::uint32_t unset = ~0u;
  c.color.assign(n, unset);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n, best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (c.color[v] != unset) continue;
      std::vector<bool> seen;
      std::size_t sat = 0;
      g.row(v).for_each([&](std::size_t u) {
        const auto col = c.color[u];
        if (col == unset) return;
        if (col >= seen.size()) seen.resize(col + 1, false);
        if (!seen[col]) {
          seen[col] = true;
          ++sat;
        }
      });
      const std::size_t deg = g.degree(v);
      if (pick == n || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::vector<bool> used;
    g.row(pick).for_each([&](std::size_t u) {
      const auto col = c.color[u];
      if (col == unset) return;
      if (col >= used.size()) used.resize(col + 1, false);
      used[col] = true;
    });
    std::uint32_t col = 0;
    while (col < used.size() && used[col]) ++col;
    c.color[pick] = col;
  }
  normalize(c);
  return c;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const Clique& clique, Coloring upper)
      : g_(g), n_(g.order()), lower_(clique.size()), best_(std::move(upper)) {
    colors_.assign(n_, unset);
    // Symmetry breaking: a maximum clique takes colors 0..w-1.
    for (std::size_t i = 0; i < clique.vertices.size(); ++i) colors_[clique.vertices[i]] = static_cast<std::uint32_t>(i);
  }

  Coloring run() {
    if (best_.count > lower_) search(lower_, static_cast<std::uint32_t>(lower_));
    best_.provenance = "exact";
    return best_;
  }

 private:
  static constexpr std::uint32_t unset = ~0u;

  void search(std::size_t colored, std::uint32_t used) {
    if (done_ || used >= best_.count) return;
    if (colored == n_) {
      best_.color = colors_;
      best_.count = used;
      if (best_.count == lower_) done_ = true;
      return;
    }
    std::size_t pick = n_, best_sat = 0, best_deg = 0;
    std::vector<bool> forbidden_pick;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors_[v] != unset) continue;
      std::vector<bool> seen(used, false);
      std::size_t sat = 0, deg = 0;
      g_.row(v).for_each([&](std::size_t u) {
        const auto col = colors_[u];
        if (col == unset) {
          ++deg;
        } else if (!seen[col]) {
          seen[col] = true;
          ++sat;
        }
      });
      if (pick == n_ || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        forbidden_pick = std::move(seen);
      }
    }
    for (std::uint32_t c = 0; c < used; ++c) {
      if (forbidden_pick[c]) continue;
      colors_[pick] = c;
      search(colored + 1, used);
      if (done_) break;
    }
    if (!done_ && used + 1 < best_.count) {
      colors_[pick] = used;
      search(colored + 1, used + 1);
    }
    colors_[pick] = unset;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t lower_;
  Coloring best_;
  std::vector<std::uint32_t> colors_;
  bool done_ = false;
};

}  // namespace

Coloring chromatic_number(const Graph& g, const Caps& caps) {
  require_exact(g, caps, "chromatic_number");
  if (g.order() == 0) return Coloring{{}, 0, "exact"};
  const Clique clique = clique_number(g, caps);
  Coloring result = ColoringSearch(g, clique, greedy_coloring(g)).run();
  normalize(result);
  result.provenance = "exact";
  if (!is_proper(g, result) || result.count < clique.size())
    throw std::logic_error("chromatic_number: solver produced an invalid coloring");
  return result;
}

}  // namespace modgraph::graph
