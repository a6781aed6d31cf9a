#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modgraph/commands.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/solver.hpp"
#include "modgraph/zoo.hpp"

namespace py = pybind11;
using namespace modgraph;

namespace {

spec::Instance load(const std::string& spec_json, const std::string& caps) {
  return cli::load_instance(spec::parse(spec_json), cli::caps_from_environment(), caps);
}

graph::Graph make_graph(std::size_t order, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  graph::Graph g(order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order || u == v) throw InvalidInput("edge out of range or a loop");
    g.add_edge(u, v);
  }
  return g;
}

Caps caps_from(const std::string& overrides) {
  Caps caps = cli::caps_from_environment();
  if (!overrides.empty()) caps.apply_overrides(overrides);
  return caps;
}

}  // namespace

PYBIND11_MODULE(_modgraph, m) {
  m.doc() = "Intersection graphs of submodules of finite modules";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("normalize", [](const std::string& s) { return spec::serialize(spec::normalize(spec::parse(s))); },
        py::arg("spec"));
  m.def("instance_id", [](const std::string& s) { return spec::canonical_id(spec::normalize(spec::parse(s))); },
        py::arg("spec"));
  m.def("lattice", [](const std::string& s, const std::string& fmt, const std::string& caps) {
        return cli::cmd_lattice(load(s, caps), fmt);
      }, py::arg("spec"), py::arg("format") = "text", py::arg("caps") = "");
  m.def("graph", [](const std::string& s, const std::string& fmt, const std::string& caps) {
        return cli::cmd_graph(load(s, caps), fmt);
      }, py::arg("spec"), py::arg("format") = "dot", py::arg("caps") = "");
  m.def("invariants", [](const std::string& s, const std::string& caps) { return cli::cmd_invariants(load(s, caps)); },
        py::arg("spec"), py::arg("caps") = "");
  m.def("verify", [](const std::string& family, const std::string& checks, const std::string& caps, bool timing) {
        const Caps c = caps_from(caps);
        py::gil_scoped_release release;
        auto out = cli::cmd_verify(zoo::resolve(family, c), checks, c, timing);
        return std::make_tuple(out.records, out.table, out.failed);
      }, py::arg("family") = "named", py::arg("checks") = "all", py::arg("caps") = "", py::arg("timing") = false);
  m.def("zoo", [](const std::string& family) { return cli::cmd_zoo(zoo::resolve(family, caps_from("")), "json"); },
        py::arg("family") = "named");
  m.def("clique_number", [](std::size_t order, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        return graph::clique_number(make_graph(order, edges)).vertices;
      }, py::arg("order"), py::arg("edges"));
  m.def("chromatic_number", [](std::size_t order, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        return graph::chromatic_number(make_graph(order, edges)).color;
      }, py::arg("order"), py::arg("edges"));
}
