// Acceptance criteria 1-12: one PASS/FAIL line each.
// Usage: acceptance [--expect-fail N,...]
// Exit 0 iff every criterion passes except exactly the listed ones.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "modgraph/commands.hpp"
#include "modgraph/construct.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/structure.hpp"
#include "modgraph/verify.hpp"
#include "modgraph/zoo.hpp"
#include "oracles.hpp"

using namespace modgraph;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Loaded {
  spec::Instance inst;
  std::shared_ptr<const modules::Lattice> lattice;
  graph::IntersectionGraph g;
};

Loaded load(const spec::Instance& inst) {
  auto lat = std::make_shared<const modules::Lattice>(modules::enumerate_submodules(inst.module, inst.caps));
  return {inst, lat, graph::build_graph(lat)};
}

Loaded load(const json& s) { return load(spec::build(s)); }

json selfsum(const json& ring) { return spec::instance(ring, spec::direct_sum(spec::regular(), spec::regular())); }

std::vector<zoo::InstanceDef> zoo_instances() {
  auto defs = zoo::named_instances();
  std::set<std::string> ids;
  for (const auto& d : defs) ids.insert(d.id);
  for (const auto& d : zoo::family("all"))
    if (ids.insert(d.id).second) defs.push_back(d);
  return defs;
}

std::vector<Loaded> zoo_loaded() {
  std::vector<Loaded> out;
  for (const auto& d : zoo_instances()) {
    try {
      auto inst = d.build();
      auto l = load(inst);
      if (l.g.order() <= inst.caps.max_exact_vertices) out.push_back(std::move(l));
    } catch (const CapExceeded&) {
    }
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const std::size_t q = static_cast<std::size_t>(std::pow(p, k));
    const auto l = load(selfsum(spec::gf(p, k)));
    if (l.g.order() != q + 1) o.fail("q=" + std::to_string(q) + ": alpha=" + std::to_string(l.g.order()));
  }
  o.detail = o.pass ? "|G(S+S)| = q+1 for q in {2,3,4,5}" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::uint32_t q : {2u, 3u}) {
    const auto l = load(spec::instance(spec::matrix(q, 1, 2)));
    const auto s = graph::classify_shape(l.g.graph()).symbol();
    if (s != "N" + std::to_string(q + 1)) o.fail("M2(F" + std::to_string(q) + ") shape " + s);
  }
  if (o.pass) o.detail = "G(M2(F_q)) = N_{q+1} for q in {2,3}";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    const auto l = load(spec::instance(spec::poly_quot(p, {"x", "y"}, {"x^2", "x*y", "y^2"})));
    const auto s = graph::classify_shape(l.g.graph()).symbol();
    if (s != "S" + std::to_string(p + 2)) o.fail("p=" + std::to_string(p) + " shape " + s);
  }
  if (o.pass) o.detail = "G(F_p[x,y]/(x^2,xy,y^2)) = S_{p+2} for p in {2,3}";
  return o;
}

/// |G(T)|, or |G(T/K)| when a kernel K inside T is given.
std::size_t vertex_count(const modules::FiniteModule& m, const Bits& t, const Bits* kernel = nullptr) {
  auto r = modules::restrict_to(m, t);
  auto mod = std::make_shared<const modules::FiniteModule>(std::move(r.module));
  if (kernel) {
    Bits local(mod->size());
    for (std::uint32_t i = 0; i < mod->size(); ++i)
      if (kernel->test(r.to_ambient[i])) local.set(i);
    mod = std::make_shared<const modules::FiniteModule>(modules::quotient(*mod, local).module);
  }
  const auto lat = modules::enumerate_submodules(mod);
  return lat.size() - 2 + (lat.size() == 1 ? 1 : 0);
}

Outcome criterion4() {
  Outcome o;
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}}) {
    const std::size_t q = static_cast<std::size_t>(std::pow(p, k));
    const std::string tag = "triangular(F" + std::to_string(q) + ",F" + std::to_string(p) + ")";
    const auto l = load(spec::instance(spec::triangular(p, k, 1)));
    const auto& ring = *l.inst.ring;
    const auto& lat = *l.lattice;
    const auto n = ring.size();
    Bits t(n), s_prime(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      const auto& c = ring.coordinates(x);
      if (c[0] == 0) t.set(x);
      if (c[0] == 0 && c[3] == 0) s_prime.set(x);
    }
    const auto ti = lat.find(t);
    if (ti == modules::Lattice::npos) {
      o.fail(tag + ": T is not a left ideal");
      continue;
    }
    const auto tv = l.g.vertex_of(ti);
    std::vector<std::size_t> low;
    for (std::size_t v = 0; v < l.g.order(); ++v)
      if (lat.is_maximal(l.g.submodule(v)) && l.g.degree(v) < l.g.complement_degree(v)) low.push_back(v);
    if (!lat.is_maximal(ti) || low != std::vector<std::size_t>{tv}) o.fail(tag + ": T is not the unique maximal vertex with deg < deg^c");
    const auto deg = l.g.degree(tv);
    if (deg != 2) o.fail(tag + ": deg(T)=" + std::to_string(deg));
    if (l.g.complement_degree(tv) != q) o.fail(tag + ": deg^c(T)=" + std::to_string(l.g.complement_degree(tv)));
    if (l.g.order() != q + 3) o.fail(tag + ": alpha=" + std::to_string(l.g.order()));
    const auto gt = vertex_count(*l.inst.module, t);
    const auto gts = vertex_count(*l.inst.module, t, &s_prime);
    if (deg != 2 * gt || deg != 2 * gts + 2)
      o.fail(tag + ": 2|G(T)|=" + std::to_string(2 * gt) + ", 2|G(T/S')|+2=" + std::to_string(2 * gts + 2));
    verify::Analysis a(l.inst);
    for (const char* id : {"C4", "C5"}) {
      const auto r = verify::run_check(verify::resolve_checks(id).at(0), a);
      if (r.status != verify::Status::Pass) o.fail(tag + ": " + r.check + " " + verify::to_string(r.status));
    }
  }
  if (o.pass) o.detail = "T unique, deg(T)=2=2|G(T)|=2|G(T/S')|+2, deg^c(T)=q, alpha=q+3 for q in {4,9}";
  return o;
}

Outcome criterion5() {
  Outcome o;
  zoo::InstanceFamily fam = zoo::family("regular");
  std::set<std::string> ids;
  for (const auto& d : fam) ids.insert(d.id);
  for (const auto& d : zoo::named_instances())
    if (ids.insert(d.id).second) fam.members.push_back(d);
  const auto res = verify::run_suite(fam, verify::resolve_checks("C2"));
  std::vector<std::string> failed;
  for (const auto& r : res.reports)
    if (r.status == verify::Status::Fail) failed.push_back(r.instance);
  if (!failed.empty()) {
    std::string names;
    for (std::size_t i = 0; i < failed.size() && i < 4; ++i) names += (i ? ", " : "") + failed[i];
    o.fail(std::to_string(failed.size()) + " FAIL of " + std::to_string(res.reports.size()) + " (" + names +
           (failed.size() > 4 ? ", ..." : "") + "): degree-1 vertices outside a star graph");
  } else {
    o.detail = std::to_string(res.reports.size()) + " instances, zero FAIL";
  }
  return o;
}

Outcome criteria_6_7(const std::vector<Loaded>& all, bool coloring) {
  Outcome o;
  std::size_t applicable = 0, constructed = 0;
  for (const auto& l : all) {
    if (!graph::has_homogeneous_length_two_socle(*l.lattice)) continue;
    ++applicable;
    const auto& g = l.g.graph();
    const std::string tag = l.inst.name;
    if (!coloring) {
      std::set<std::vector<std::size_t>> cliques, overlines;
      for (const auto& c : graph::max_cliques(g)) cliques.insert(c.vertices);
      for (auto a : l.lattice->simples()) overlines.insert(graph::overline(l.g, l.g.vertex_of(a)));
      if (cliques != overlines) o.fail(tag + ": maximal cliques differ from overlines");
      continue;
    }
    const auto w = graph::clique_number(g).size();
    const auto x = graph::chromatic_number(g).count;
    if (w != x) o.fail(tag + ": omega=" + std::to_string(w) + " chi=" + std::to_string(x));
    const auto r = graph::color_by_overline(l.g);
    if (r.applicable()) {
      ++constructed;
      if (r.coloring->count != w || !graph::is_proper(g, *r.coloring)) o.fail(tag + ": construction used " + std::to_string(r.coloring->count) + " colors");
    }
  }
  if (applicable == 0) o.fail("no instance with a homogeneous length-2 essential socle");
  if (o.pass)
    o.detail = coloring ? std::to_string(applicable) + " instances, omega = chi, construction exact on " + std::to_string(constructed)
                        : std::to_string(applicable) + " instances, maximal cliques = overlines";
  return o;
}

Outcome criterion8(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t tested = 0;
  std::vector<std::string> gaps;
  for (const auto& l : all) {
    const auto comp = l.g.graph().complement();
    if (graph::clique_number(l.g.graph()).size() > graph::clique_number(comp).size()) continue;
    ++tested;
    if (graph::clique_number(comp).size() != graph::chromatic_number(comp).count) o.fail(l.inst.name + ": omega^c != chi^c");
    if (!graph::color_complement_by_uniform_clique(l.g).applicable()) gaps.push_back(l.inst.name);
  }
  const bool tri = std::find(gaps.begin(), gaps.end(), "triangular(F4,F2)/regular") != gaps.end();
  if (!tri) o.fail("construction did not fail on triangular(F4,F2)");
  if (o.pass)
    o.detail = std::to_string(tested) + " instances, omega^c = chi^c; construction not total on " + std::to_string(gaps.size()) +
               " (incl. triangular(F4,F2))";
  return o;
}

Outcome run_check_over(const std::vector<Loaded>& all, const char* id) {
  Outcome o;
  for (const auto& l : all) {
    verify::Analysis a(l.inst);
    const auto r = verify::run_check(verify::resolve_checks(id).at(0), a);
    if (r.status == verify::Status::Fail) o.fail(l.inst.name + ": " + r.check + " " + r.witness.dump());
  }
  return o;
}

Outcome criterion9(const std::vector<Loaded>& all) {
  Outcome o = run_check_over(all, "C9");
  std::size_t tf = 0;
  for (const auto& l : all)
    if (graph::is_triangle_free(l.g.graph())) {
      ++tf;
      if (graph::girth(l.g.graph())) o.fail(l.inst.name + ": triangle-free with finite girth");
    }
  if (o.pass) o.detail = std::to_string(all.size()) + " instances, " + std::to_string(tf) + " triangle-free, all acyclic";
  return o;
}

Outcome criterion10(const std::vector<Loaded>& all) {
  Outcome o = run_check_over(all, "C10");
  for (const auto& l : all) {
    const auto& g = l.g.graph();
    if (g.order() == 0) continue;
    const bool two_simples = modules::composition_length(*l.lattice) == 2 && modules::socle(*l.lattice) == l.lattice->full();
    const bool connected = graph::is_connected(g);
    if (connected == two_simples) o.fail(l.inst.name + ": connectivity does not match");
    if (connected && g.order() >= 2 && graph::diameter(g).value_or(99) > 2) o.fail(l.inst.name + ": diameter > 2");
  }
  if (o.pass) o.detail = std::to_string(all.size()) + " instances, connected iff not two simples, diameter <= 2";
  return o;
}

Outcome criterion11(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t lattices = 0, graphs = 0;
  for (const auto& l : all) {
    if (l.inst.module->size() > 32) continue;
    std::set<oracle::Members> lib;
    for (const auto& s : l.lattice->submodules()) lib.insert(s.members.members());
    const auto brute = l.inst.module->size() <= 16 ? oracle::submodules_by_subsets(*l.inst.module)
                                                   : oracle::submodules_by_backtracking(*l.inst.module);
    if (lib != brute) o.fail(l.inst.name + ": lattice mismatch");
    ++lattices;
  }
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 12; ++n)
    for (double p : {0.2, 0.5, 0.8})
      for (int rep = 0; rep < 5; ++rep) {
        const auto g = oracle::random_graph(n, p, rng);
        if (graph::clique_number(g).size() != oracle::clique_number(g)) o.fail("omega mismatch at n=" + std::to_string(n));
        if (graph::chromatic_number(g).count != oracle::chromatic_number(g)) o.fail("chi mismatch at n=" + std::to_string(n));
        ++graphs;
      }
  for (std::uint32_t q : {2u, 3u})
    for (unsigned d = 1; d <= 3; ++d) {
      json m = spec::regular();
      for (unsigned i = 1; i < d; ++i) m = spec::direct_sum(m, spec::regular());
      const auto inst = spec::build(d == 1 ? spec::instance(spec::gf(q, 1)) : spec::instance(spec::gf(q, 1), m));
      const auto lat = modules::enumerate_submodules(inst.module);
      if (lat.size() != oracle::subspace_count(q, d))
        o.fail("F_" + std::to_string(q) + "^" + std::to_string(d) + ": " + std::to_string(lat.size()) + " subspaces");
    }
  if (o.pass)
    o.detail = std::to_string(lattices) + " lattices, " + std::to_string(graphs) + " random graphs, 6 subspace counts";
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& d : zoo::named_instances()) {
    const auto text = d.spec.dump(2);
    auto a = cli::load_instance(json::parse(text), {}, "");
    auto b = cli::load_instance(json::parse(text), {}, "");
    for (const char* fmt : {"dot", "json"})
      if (cli::cmd_graph(a, fmt) != cli::cmd_graph(b, fmt)) o.fail(d.name + ": graph " + fmt + " differs");
    if (cli::cmd_invariants(a) != cli::cmd_invariants(b)) o.fail(d.name + ": invariants differ");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " instances, graph and invariants byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") {
      std::stringstream ss(argv[i + 1]);
      for (std::string tok; std::getline(ss, tok, ',');) expected.insert(std::stoi(tok));
    }

  const auto all = zoo_loaded();
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1,
      criterion2,
      criterion3,
      criterion4,
      criterion5,
      [&] { return criteria_6_7(all, false); },
      [&] { return criteria_6_7(all, true); },
      [&] { return criterion8(all); },
      [&] { return criterion9(all); },
      [&] { return criterion10(all); },
      [&] { return criterion11(all); },
      criterion12,
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %2d  %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
    if (o.pass == (expected.count(id) > 0)) ++unexpected;
  }
  if (!expected.empty()) {
    std::string list;
    for (int e : expected) list += (list.empty() ? "" : ",") + std::to_string(e);
    std::printf("expected to fail: %s\n", list.c_str());
  }
  return unexpected == 0 ? 0 : 1;
}
