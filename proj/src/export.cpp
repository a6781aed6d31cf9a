#include "modgraph/export.hpp"

#include <sstream>

#include "modgraph/errors.hpp"

namespace modgraph::graph {

namespace {

std::string generator_labels(const modules::FiniteModule& m, const std::vector<std::uint32_t>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += m.label(gens[i]);
  }
  return out + ">";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

nlohmann::json graph_json(const IntersectionGraph& g) {
  const auto& lat = g.lattice();
  nlohmann::json j;
  j["order"] = g.order();
  auto vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& sub = lat[g.submodule(v)];
    vertices.push_back({{"id", "v" + std::to_string(v)}, {"generators", sub.generators}, {"size", sub.size()}});
  }
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.graph().edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["invariants"] = {{"edge_count", g.graph().edge_count()},
                     {"shape", classify_shape(g.graph()).symbol()},
                     {"connected", is_connected(g.graph())}};
  return j;
}

std::string to_json(const IntersectionGraph& g) { return graph_json(g).dump(2) + "\n"; }

std::string to_dot(const IntersectionGraph& g) {
  const auto& lat = g.lattice();
  const auto& m = lat.module();
  std::ostringstream out;
  out << "graph \"" << dot_escape(m.name()) << "\" {\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& sub = lat[g.submodule(v)];
    out << "  v" << v << " [label=\"v" << v << " " << dot_escape(generator_labels(m, sub.generators)) << " |"
        << sub.size() << "|\"];\n";
  }
  for (const auto& [u, v] : g.graph().edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_graph(const IntersectionGraph& g, std::string_view format) {
  if (format == "dot") return to_dot(g);
  if (format == "json") return to_json(g);
  throw InvalidInput("unknown export format '" + std::string(format) + "' (expected dot or json)");
}

}  // namespace modgraph::graph
