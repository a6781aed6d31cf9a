#include "modgraph/construct.hpp"

#include <algorithm>

#include "modgraph/errors.hpp"
#include "modgraph/structure.hpp"

namespace modgraph::graph {

std::vector<std::size_t> overline(const IntersectionGraph& g, std::size_t v) {
  const auto& lat = g.lattice();
  if (v >= g.order() || !lat.is_simple(g.submodule(v))) throw InvalidInput("overline: vertex is not a simple submodule");
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (lat.leq(g.submodule(v), g.submodule(w))) out.push_back(w);
  return out;
}

bool has_homogeneous_length_two_socle(const modules::Lattice& lat) {
  const std::size_t soc = modules::socle(lat);
  if (soc == lat.zero() || lat.interval_length(lat.zero(), soc) != 2 || !lat.is_essential(soc)) return false;
  std::vector<std::size_t> inside;
  for (auto a : lat.simples())
    if (lat.leq(a, soc)) inside.push_back(a);
  if (inside.size() < 2) return false;
  return modules::iso_count(lat.module(), lat[inside[0]].members, lat.module(), lat[inside[1]].members) > 0;
}

ConstructionResult color_by_overline(const IntersectionGraph& g) {
  const auto& lat = g.lattice();
  if (!has_homogeneous_length_two_socle(lat))
    throw InvalidInput("color_by_overline: socle is not an essential sum of two isomorphic simples");
  const std::size_t soc = modules::socle(lat);
  const std::size_t n = g.order();

  std::vector<bool> in_l(n, false);
  for (std::size_t v = 0; v < n; ++v) in_l[v] = lat.leq(soc, g.submodule(v));

  std::vector<std::size_t> simple_vertices;
  for (auto a : lat.simples()) simple_vertices.push_back(g.vertex_of(a));

  ConstructionResult result;
  std::size_t chosen = simple_vertices.front();
  std::size_t chosen_size = 0;
  for (auto s : simple_vertices) {
    const auto o = overline(g, s);
    if (o.size() > chosen_size) {
      chosen = s;
      chosen_size = o.size();
    }
  }
  const auto base = overline(g, chosen);
  result.selection = base;

  constexpr std::uint32_t unset = ~0u;
  Coloring c;
  c.provenance = "overline";
  c.color.assign(n, unset);
  std::vector<std::uint32_t> palette;
  for (std::size_t i = 0; i < base.size(); ++i) {
    c.color[base[i]] = static_cast<std::uint32_t>(i);
    if (!in_l[base[i]]) palette.push_back(static_cast<std::uint32_t>(i));
  }
  c.count = static_cast<std::uint32_t>(base.size());

  for (auto s : simple_vertices) {
    if (s == chosen) continue;
    std::vector<std::size_t> rest;
    for (auto w : overline(g, s))
      if (!in_l[w]) rest.push_back(w);
    if (rest.size() > palette.size()) {
      result.failure = "overline of a simple outside the chosen one is larger than the palette";
      result.witness = {s};
      return result;
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (c.color[rest[i]] != unset) {
        result.failure = "overlines minus the submodules containing the socle are not disjoint";
        result.witness = {s, rest[i]};
        return result;
      }
      c.color[rest[i]] = palette[i];
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (c.color[v] == unset) {
      result.failure = "vertex lies in no overline";
      result.witness = {v};
      return result;
    }
  if (!is_proper(g.graph(), c)) {
    result.failure = "scheme produced an improper coloring";
    for (const auto& [u, v] : g.graph().edges())
      if (c.color[u] == c.color[v]) {
        result.witness = {u, v};
        break;
      }
    return result;
  }
  result.coloring = std::move(c);
  return result;
}

ConstructionResult color_complement_by_uniform_clique(const IntersectionGraph& g) {
  const auto& lat = g.lattice();
  const std::size_t n = g.order();
  ConstructionResult result;
  std::vector<std::size_t> clique;
  for (std::size_t v = 0; v < n; ++v) {
    if (!lat.is_uniform(g.submodule(v))) continue;
    bool ok = true;
    for (auto u : clique)
      if (!g.graph().adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  result.selection = clique;

  Coloring c;
  c.provenance = "uniform-clique";
  c.color.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t t = 0;
    while (t < clique.size() && clique[t] != v && !g.graph().adjacent(v, clique[t])) ++t;
    if (t == clique.size()) {
      result.failure = "vertex meets no member of the uniform clique";
      result.witness = {v};
      return result;
    }
    c.color[v] = static_cast<std::uint32_t>(t);
  }
  c.count = static_cast<std::uint32_t>(clique.size());
  normalize(c);
  const Graph comp = g.graph().complement();
  if (!is_proper(comp, c)) {
    result.failure = "scheme produced an improper coloring of the complement";
    return result;
  }
  result.coloring = std::move(c);
  return result;
}

}  // namespace modgraph::graph
