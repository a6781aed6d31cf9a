#include "modgraph/commands.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modgraph/errors.hpp"
#include "modgraph/export.hpp"
#include "modgraph/structure.hpp"

namespace modgraph::cli {

using nlohmann::json;

namespace {

struct Built {
  std::shared_ptr<const modules::Lattice> lattice;
  graph::IntersectionGraph graph;
};

Built analyse(const spec::Instance& inst) {
  Built b;
  b.lattice = std::make_shared<const modules::Lattice>(modules::enumerate_submodules(inst.module, inst.caps));
  b.graph = graph::build_graph(b.lattice);
  return b;
}

json optional_number(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string cmd_lattice(const spec::Instance& inst, const std::string& format) {
  const auto b = analyse(inst);
  const auto& lat = *b.lattice;
  const auto& m = lat.module();
  if (format == "json") {
    json subs = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i)
      subs.push_back({{"index", i}, {"size", lat[i].size()}, {"generators", lat[i].generators},
                      {"members", lat[i].members.members()}});
    json j = {{"instance", inst.id}, {"module", m.name()}, {"module_size", m.size()}, {"submodules", subs}};
    return j.dump(2) + "\n";
  }
  if (format != "text") throw InvalidInput("unknown lattice format '" + format + "' (expected text or json)");
  std::ostringstream out;
  out << "# " << m.name() << " |M|=" << m.size() << " submodules=" << lat.size() << "\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out << i << " |" << lat[i].size() << "| <";
    for (std::size_t k = 0; k < lat[i].generators.size(); ++k) out << (k ? ", " : "") << m.label(lat[i].generators[k]);
    out << ">";
    if (i == lat.zero()) out << " zero";
    if (i == lat.full()) out << " whole";
    out << "\n";
  }
  return out.str();
}

std::string cmd_graph(const spec::Instance& inst, const std::string& format) {
  return graph::export_graph(analyse(inst).graph, format);
}

json invariants(const spec::Instance& inst) {
  const auto b = analyse(inst);
  const auto& g = b.graph.graph();
  const auto gc = g.complement();
  const auto& lat = *b.lattice;
  json degrees = json::array();
  for (std::size_t v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  const std::size_t soc = modules::socle(lat);
  json j;
  j["instance"] = inst.id;
  j["name"] = inst.name;
  j["order"] = g.order();
  j["degrees"] = std::move(degrees);
  j["omega"] = graph::clique_number(g, inst.caps).size();
  j["chi"] = graph::chromatic_number(g, inst.caps).count;
  j["omega_c"] = graph::clique_number(gc, inst.caps).size();
  j["chi_c"] = graph::chromatic_number(gc, inst.caps).count;
  j["girth"] = optional_number(graph::girth(g));
  j["diameter"] = optional_number(graph::diameter(g));
  j["connected"] = graph::is_connected(g);
  j["shape"] = graph::classify_shape(g).symbol();
  j["socle"] = {{"size", lat[soc].size()}, {"generators", lat[soc].generators}};
  j["goldie"] = modules::goldie_dimension(lat);
  j["length"] = modules::composition_length(lat);
  return j;
}

std::string cmd_invariants(const spec::Instance& inst) { return invariants(inst).dump(2) + "\n"; }

VerifyOutput cmd_verify(const zoo::InstanceFamily& family, const std::string& checks, const Caps& caps,
                        bool with_timing) {
  VerifyOutput out;
  out.result = verify::run_suite(family, verify::resolve_checks(checks), caps);
  std::ostringstream lines;
  for (const auto& r : out.result.reports) lines << r.to_json(with_timing).dump() << "\n";
  out.records = lines.str();
  out.table = out.result.summary.table();
  out.failed = out.result.summary.failures > 0;
  return out;
}

std::string cmd_zoo(const zoo::InstanceFamily& family, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& d : family) arr.push_back({{"name", d.name}, {"id", d.id}, {"spec", d.spec}});
    return arr.dump(2) + "\n";
  }
  if (format != "text") throw InvalidInput("unknown zoo format '" + format + "' (expected text or json)");
  std::ostringstream out;
  for (const auto& d : family) out << d.id << "  " << d.name << "\n";
  return out.str();
}

Caps caps_from_environment() {
  Caps caps;
  if (const char* env = std::getenv("MODGRAPH_CAPS")) caps.apply_overrides(env);
  return caps;
}

spec::Instance load_instance(const json& s, const Caps& base, const std::string& flag_overrides) {
  const auto normalized = spec::normalize(s);
  Caps caps = spec::effective_caps(normalized, base);
  if (!flag_overrides.empty()) caps.apply_overrides(flag_overrides);
  return spec::build(normalized, caps, {}, false);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection graphs of finite modules: lattices, graphs, invariants and checks", "modgraph"};
  app.require_subcommand(1);
  std::size_t max_ring = 0, max_module = 0, max_subs = 0, max_exact = 0;
  app.add_option("--max-ring-size", max_ring, "Largest ring to construct");
  app.add_option("--max-module-size", max_module, "Largest module to construct");
  app.add_option("--max-submodules", max_subs, "Largest lattice to enumerate");
  app.add_option("--max-exact-vertices", max_exact, "Largest graph for the exact solvers");

  std::string spec_path, format, family_name = "named", checks = "all";
  bool no_timing = false;

  auto* lattice = app.add_subcommand("lattice", "List the submodule lattice of an instance");
  lattice->add_option("--spec", spec_path, "Instance spec file")->required();
  lattice->add_option("--format", format, "text or json");

  auto* graph_cmd = app.add_subcommand("graph", "Export the intersection graph");
  graph_cmd->add_option("--spec", spec_path, "Instance spec file")->required();
  graph_cmd->add_option("--format", format, "dot or json");

  auto* inv = app.add_subcommand("invariants", "Exact graph and module invariants as JSON");
  inv->add_option("--spec", spec_path, "Instance spec file")->required();

  auto* ver = app.add_subcommand("verify", "Run the checks over a family or one instance");
  auto* fam_opt = ver->add_option("--family", family_name, "named or family:<filter>:<max ring size>");
  ver->add_option("--spec", spec_path, "Instance spec file")->excludes(fam_opt);
  ver->add_option("--check", checks, "all, or comma-separated check ids (C1..C11)");
  ver->add_option("--format", format, "jsonl (records, summary on stderr) or table");
  ver->add_flag("--no-timing", no_timing, "Omit timings from the records");

  auto* zoo_cmd = app.add_subcommand("zoo", "List instances");
  zoo_cmd->add_option("--family", family_name, "named or family:<filter>:<max ring size>");
  zoo_cmd->add_option("--format", format, "text or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    std::string overrides;
    auto add = [&](const char* key, std::size_t v) {
      if (v) overrides += (overrides.empty() ? "" : ",") + std::string(key) + "=" + std::to_string(v);
    };
    add("max_ring_size", max_ring);
    add("max_module_size", max_module);
    add("max_submodules", max_subs);
    add("max_exact_vertices", max_exact);
    const Caps base = caps_from_environment();
    Caps flag_caps = base;
    if (!overrides.empty()) flag_caps.apply_overrides(overrides);

    if (*lattice || *graph_cmd || *inv) {
      const auto inst = load_instance(spec::load_file(spec_path), base, overrides);
      if (*lattice) out << cmd_lattice(inst, format.empty() ? "text" : format);
      if (*graph_cmd) out << cmd_graph(inst, format.empty() ? "dot" : format);
      if (*inv) out << cmd_invariants(inst);
      return kOk;
    }
    if (*ver) {
      zoo::InstanceFamily fam;
      if (!spec_path.empty()) {
        const auto inst = load_instance(spec::load_file(spec_path), base, overrides);
        fam.name = "spec";
        fam.members.push_back(zoo::make_def(inst.name, inst.spec));
        flag_caps = inst.caps;
      } else {
        fam = zoo::resolve(family_name, flag_caps);
      }
      if (!format.empty() && format != "jsonl" && format != "table")
        throw InvalidInput("unknown verify format '" + format + "' (expected jsonl or table)");
      const auto res = cmd_verify(fam, checks, flag_caps, !no_timing);
      if (format == "table") {
        out << res.table;
      } else {
        out << res.records;
        err << res.table;
      }
      return res.failed ? kVerifyFailed : kOk;
    }
    out << cmd_zoo(zoo::resolve(family_name, flag_caps), format.empty() ? "text" : format);
    return kOk;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace modgraph::cli
