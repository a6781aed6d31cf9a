#include "modgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "modgraph/construct.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/structure.hpp"

namespace modgraph::verify {

using nlohmann::json;
using modules::Lattice;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Vacuous: return "VACUOUS";
    case Status::ApplicabilityFailed: return "APPLICABILITY-FAILED";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

json CheckReport::to_json(bool with_timing) const {
  json j = {{"check", check},     {"instance", instance}, {"instance_id", instance_id}, {"status", verify::to_string(status)},
            {"witness", witness}, {"metadata", metadata}, {"notes", notes}};
  if (with_timing) j["millis"] = millis;
  return j;
}

Analysis::Analysis(spec::Instance inst) : inst_(std::move(inst)) {
  lattice_ = std::make_shared<const Lattice>(modules::enumerate_submodules(inst_.module, inst_.caps));
  graph_ = graph::build_graph(lattice_);
  complement_ = graph_.graph().complement();
}

std::size_t Analysis::socle() {
  if (!socle_) socle_ = modules::socle(*lattice_);
  return *socle_;
}

std::size_t Analysis::length() {
  if (!length_) length_ = modules::composition_length(*lattice_);
  return *length_;
}

const graph::Clique& Analysis::omega() {
  if (!omega_) omega_ = graph::clique_number(graph_.graph(), inst_.caps);
  return *omega_;
}

const graph::Coloring& Analysis::chi() {
  if (!chi_) chi_ = graph::chromatic_number(graph_.graph(), inst_.caps);
  return *chi_;
}

const graph::Clique& Analysis::omega_c() {
  if (!omega_c_) omega_c_ = graph::clique_number(complement_, inst_.caps);
  return *omega_c_;
}

const graph::Coloring& Analysis::chi_c() {
  if (!chi_c_) chi_c_ = graph::chromatic_number(complement_, inst_.caps);
  return *chi_c_;
}

namespace {

CheckReport start(const char* id, Analysis& a) {
  CheckReport r;
  r.check = id;
  r.instance = a.instance().name;
  r.instance_id = a.instance().id;
  return r;
}

CheckReport& fail(CheckReport& r, const std::string& what, json witness) {
  if (r.status != Status::Fail) {
    r.status = Status::Fail;
    witness["reason"] = what;
    r.witness = std::move(witness);
  }
  return r;
}

/// "0", "M" or the vertex name of a lattice index.
std::string name_of(const Lattice& lat, std::size_t i) {
  if (i == lat.zero()) return "0";
  if (i == lat.full()) return "M";
  return "v" + std::to_string(i - 1);
}

json describe(const Lattice& lat, std::size_t i) {
  return {{"vertex", name_of(lat, i)}, {"generators", lat[i].generators}, {"size", lat[i].size()}};
}

std::uint64_t end_of(const Lattice& lat, std::size_t s) {
  const auto& m = lat.module();
  return modules::hom_count_from_simple(m, lat[s].members, m, lat[s].members);
}

std::uint64_t iso_of(const Lattice& lat, std::size_t s, std::size_t t) {
  const auto& m = lat.module();
  return modules::iso_count(m, lat[s].members, m, lat[t].members);
}

std::vector<std::size_t> atoms_below(const Lattice& lat, std::size_t x) {
  std::vector<std::size_t> out;
  for (auto s : lat.simples())
    if (lat.leq(s, x)) out.push_back(s);
  return out;
}

/// x is a direct sum of two simples: returns them, if so.
std::optional<std::pair<std::size_t, std::size_t>> two_simple_split(const Lattice& lat, std::size_t x) {
  if (lat.interval_length(lat.zero(), x) != 2) return std::nullopt;
  const auto atoms = atoms_below(lat, x);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (lat.join(atoms[i], atoms[j]) == x) return std::pair{atoms[i], atoms[j]};
  return std::nullopt;
}

std::vector<std::size_t> maximal_submodules(const Lattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.full(); ++i)
    if (lat.is_maximal(i)) out.push_back(i);
  return out;
}

bool is_chain(const Lattice& lat) {
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j)
      if (!lat.leq(i, j) && !lat.leq(j, i)) return false;
  return true;
}

/// Independent recount through a freshly enumerated lattice.
Lattice lattice_of(const modules::FiniteModule& m, const Caps& caps) {
  return modules::enumerate_submodules(std::make_shared<const modules::FiniteModule>(m), caps);
}

std::size_t graph_order(const Lattice& lat) { return lat.size() >= 2 ? lat.size() - 2 : 0; }

Lattice quotient_lattice(const Lattice& lat, std::size_t n, const Caps& caps) {
  return lattice_of(modules::quotient(lat.module(), lat[n].members, caps).module, caps);
}

Lattice restricted_lattice(const Lattice& lat, std::size_t n, const Caps& caps) {
  return lattice_of(modules::restrict_to(lat.module(), lat[n].members, caps).module, caps);
}

/// Lattice of x / k for k below x, via restriction then quotient.
Lattice subquotient_lattice(const Lattice& lat, std::size_t k, std::size_t x, const Caps& caps) {
  const auto r = modules::restrict_to(lat.module(), lat[x].members, caps);
  Bits kb(r.module.size());
  for (std::uint32_t i = 0; i < r.module.size(); ++i)
    if (lat[k].members.test(r.to_ambient[i])) kb.set(i);
  return lattice_of(modules::quotient(r.module, kb, caps).module, caps);
}

bool is_star_graph(const graph::Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

}  // namespace

CheckReport check_C1_iso_counts(Analysis& a) {
  auto r = start("C1-iso-counts", a);
  const auto& lat = a.lattice();
  const auto split = a.socle() == lat.full() ? two_simple_split(lat, lat.full()) : std::nullopt;
  if (!split) {
    r.status = Status::Vacuous;
    r.notes.push_back("module is not a direct sum of two simple submodules");
    return r;
  }
  const auto [s1, s2] = *split;
  const std::size_t alpha = a.order();
  const auto iso = iso_of(lat, s1, s2);
  r.metadata = {{"alpha", alpha}, {"iso", iso}, {"S1", describe(lat, s1)}, {"S2", describe(lat, s2)}};
  if (alpha != iso + 2) fail(r, "alpha != |Iso(S1,S2)| + 2", {{"alpha", alpha}, {"expected", iso + 2}});
  if (iso > 0) {
    const auto e1 = end_of(lat, s1);
    r.metadata["end_S"] = e1;
    if (alpha != e1 + 1) fail(r, "alpha != |End(S)| + 1", {{"alpha", alpha}, {"expected", e1 + 1}});
    // |End(S1 + S2)| is the product of the four Hom counts.
    const auto& m = lat.module();
    const std::uint64_t end_m = e1 * modules::hom_count_from_simple(m, lat[s1].members, m, lat[s2].members) *
                                modules::hom_count_from_simple(m, lat[s2].members, m, lat[s1].members) *
                                end_of(lat, s2);
    r.metadata["end_M"] = end_m;
    r.notes.push_back("literal |End(M)|+1 reading gives " + std::to_string(end_m + 1) + ", the graph has " +
                      std::to_string(alpha) + " vertices; the |End(S)|+1 reading is the one checked");
  }
  return r;
}

CheckReport check_C2_low_degree(Analysis& a) {
  auto r = start("C2-low-degree", a);
  const auto& lat = a.lattice();
  const auto& g = a.graph();
  const std::size_t alpha = g.order();
  std::size_t deg0 = 0, deg1 = 0;

  for (std::size_t v = 0; v < alpha; ++v) {
    const std::size_t n = g.submodule(v);
    // deg(N) = 0 iff N is the only vertex, or N is simple with a simple complement.
    bool predicted = alpha == 1;
    std::optional<std::size_t> complement;
    if (!predicted && lat.is_simple(n)) {
      for (auto s : lat.simples())
        if (s != n && lat.meet(n, s) == lat.zero() && lat.join(n, s) == lat.full()) {
          complement = s;
          break;
        }
      predicted = complement.has_value();
    }
    const std::size_t d = g.degree(v);
    if ((d == 0) != predicted)
      fail(r, "deg(N) = 0 does not match the structural prediction",
           {{"vertex", describe(lat, n)}, {"degree", d}, {"predicted_isolated", predicted}});
    if (d == 0) {
      ++deg0;
      if (complement && alpha != iso_of(lat, n, *complement) + 2)
        fail(r, "isolated simple N with simple complement S but alpha != |Iso(N,S)|+2",
             {{"vertex", describe(lat, n)}, {"alpha", alpha}, {"expected", iso_of(lat, n, *complement) + 2}});
    }
    if (d == 1) ++deg1;
  }

  const bool star = is_star_graph(g.graph());
  r.metadata = {{"alpha", alpha}, {"degree0", deg0}, {"degree1", deg1}, {"star", star}};

  // Soc = S1 + S2 as the unique maximal submodule predicts the star S_{|Iso|+3}.
  const auto maxes = maximal_submodules(lat);
  std::optional<std::pair<std::size_t, std::size_t>> soc_split;
  if (maxes.size() == 1 && maxes[0] == a.socle()) soc_split = two_simple_split(lat, maxes[0]);
  if (soc_split && deg1 > 0) {
    const auto iso = iso_of(lat, soc_split->first, soc_split->second);
    r.metadata["star_predicted_order"] = iso + 3;
    if (alpha != iso + 3)
      fail(r, "Soc = S1+S2 unique maximal but alpha != |Iso(S1,S2)|+3", {{"alpha", alpha}, {"expected", iso + 3}});
  }

  // Every degree-1 vertex N with neighbour N1: N1 < N and G = K2; or N < N1 with N
  // simple and either G = K2, Soc = N1 unique maximal, or M = N + C with C a
  // chain of length 2. Only the first three give a star.
  json cases = json::object();
  std::optional<std::size_t> off_star;
  for (std::size_t v = 0; v < alpha; ++v) {
    if (g.degree(v) != 1) continue;
    const std::size_t n = g.submodule(v);
    const std::size_t n1 = g.submodule(g.graph().row(v).first());
    std::string kind;
    if (lat.leq(n1, n)) {
      if (alpha == 2) kind = "nested-K2";
    } else if (lat.leq(n, n1) && lat.is_simple(n)) {
      if (alpha == 2) {
        kind = "nested-K2";
      } else if (soc_split && n1 == maxes[0]) {
        kind = "socle-unique-maximal";
      } else {
        for (std::size_t c = 1; c < lat.full(); ++c)
          if (lat.meet(n, c) == lat.zero() && lat.join(n, c) == lat.full() && lat.below(c).size() == 3) {
            kind = "simple-plus-chain";
            break;
          }
      }
    }
    if (kind.empty()) {
      fail(r, "degree-1 vertex outside every structural case", {{"vertex", describe(lat, n)}, {"neighbour", describe(lat, n1)}});
      continue;
    }
    cases[kind] = cases.value(kind, 0) + 1;
    if (kind == "simple-plus-chain" && !off_star) off_star = n;
  }
  r.metadata["degree1_cases"] = cases;
  if ((deg1 > 0) != star) {
    json w = {{"degree1", deg1}, {"star", star}};
    if (off_star) {
      w["vertex"] = describe(lat, *off_star);
      w["case"] = "M = N + C with N simple and C a chain of length 2";
    }
    fail(r, "a degree-1 vertex exists but the graph is not a star", std::move(w));
  }
  if (deg0 == 0 && deg1 == 0) {
    if (r.status != Status::Fail) r.status = Status::Vacuous;
    r.notes.push_back("no vertex of degree 0 or 1");
  }
  return r;
}

CheckReport check_C3_length_additivity(Analysis& a) {
  auto r = start("C3-length-additivity", a);
  const auto& lat = a.lattice();
  const auto& caps = a.caps();
  const std::size_t total = a.length();
  if (a.order() == 0) {
    r.status = Status::Vacuous;
    r.notes.push_back("no nontrivial submodule");
    return r;
  }
  for (std::size_t n = 1; n < lat.full(); ++n) {
    const std::size_t ln = modules::composition_length(restricted_lattice(lat, n, caps));
    const std::size_t lq = modules::composition_length(quotient_lattice(lat, n, caps));
    if (ln + lq != total) {
      fail(r, "l(M) != l(N) + l(M/N)", {{"N", describe(lat, n)}, {"l_M", total}, {"l_N", ln}, {"l_M_mod_N", lq}});
      break;
    }
  }
  r.metadata = {{"length", total}, {"checked", a.order()}};
  return r;
}

CheckReport check_C4_maximal_low_degree(Analysis& a) {
  auto r = start("C4-maximal-low-degree", a);
  const auto& lat = a.lattice();
  const auto& g = a.graph();
  const auto& caps = a.caps();
  json checked = json::array();

  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::size_t t = g.submodule(v);
    if (!lat.is_maximal(t) || g.degree(v) >= g.complement_degree(v)) continue;
    const std::size_t deg = g.degree(v), degc = g.complement_degree(v);
    json info = {{"T", describe(lat, t)}, {"deg", deg}, {"deg_c", degc}};
    auto bad = [&](const std::string& what, json extra = json::object()) {
      extra["T"] = describe(lat, t);
      fail(r, what, std::move(extra));
    };

    // (1)(i) M = S + T with S simple.
    std::optional<std::size_t> s;
    for (auto x : lat.simples())
      if (lat.meet(x, t) == lat.zero() && lat.join(x, t) == lat.full()) {
        s = x;
        break;
      }
    if (!s) {
      bad("(1)(i): no simple complement of T");
      continue;
    }
    info["S"] = describe(lat, *s);
    // (1)(ii) |End(S)| = deg^c(T).
    const auto end_s = end_of(lat, *s);
    info["end_S"] = end_s;
    if (end_s != degc) bad("(1)(ii): |End(S)| != deg^c(T)", {{"end_S", end_s}, {"deg_c", degc}});
    // (1)(iii) T has a unique simple S', essential in T and isomorphic to S.
    const auto inside = atoms_below(lat, t);
    if (inside.size() != 1) {
      bad("(1)(iii): T does not have a unique simple submodule", {{"simples_in_T", inside.size()}});
      continue;
    }
    const std::size_t sp = inside[0];
    info["S_prime"] = describe(lat, sp);
    for (auto x : lat.below(t))
      if (x != lat.zero() && !lat.leq(sp, x)) bad("(1)(iii): S' is not essential in T", {{"X", describe(lat, x)}});
    if (iso_of(lat, *s, sp) == 0) bad("(1)(iii): S' is not isomorphic to S");
    // (1)(iv) T/N contains no copy of S for nontrivial N < T.
    for (auto n : lat.below(t)) {
      if (n == lat.zero() || n == t) continue;
      const std::size_t ns = lat.join(n, *s);
      for (auto x : modules::covers(lat, n))
        if (lat.leq(x, t) && modules::hom_count_between_subquotients(lat, n, x, ns) > 1)
          bad("(1)(iv): T/N contains a copy of S", {{"N", describe(lat, n)}, {"X", describe(lat, x)}});
    }
    // (2)(i) Soc(M) = S' + S, essential.
    const std::size_t soc = a.socle();
    if (soc != lat.join(sp, *s) || !lat.is_essential(soc)) bad("(2)(i): Soc(M) != S' + S or not essential");
    // (2)(ii) N meeting T lies in T or equals (N meet T) + S.
    for (std::size_t n = 1; n < lat.size(); ++n) {
      const std::size_t nt = lat.meet(n, t);
      if (nt == lat.zero() || lat.leq(n, t)) continue;
      if (lat.join(nt, *s) != n) bad("(2)(ii): N is neither inside T nor (N meet T) + S", {{"N", describe(lat, n)}});
    }
    // (2)(iii) verified in the form deg(T) = |G(M/S')|; the literal +1 is reported.
    const std::size_t g_quot = graph_order(quotient_lattice(lat, sp, caps));
    info["G_M_mod_S_prime"] = g_quot;
    if (deg != g_quot) bad("(2)(iii): deg(T) != |G(M/S')|", {{"deg", deg}, {"G_M_mod_S_prime", g_quot}});
    if (deg != g_quot + 1)
      r.notes.push_back("(2)(iii) literal deg(T) = |G(M/S')|+1 is off by " +
                        std::to_string(static_cast<long long>(g_quot + 1) - static_cast<long long>(deg)) + " at T=" +
                        name_of(lat, t) + " (deg " + std::to_string(deg) + ", |G(M/S')| " + std::to_string(g_quot) +
                        "); it holds counting T in its own neighbourhood");
    // (2)(iv) deg(T) = 2|G(T)| = 2|G(T/S')| + 2.
    const std::size_t g_t = graph_order(restricted_lattice(lat, t, caps));
    info["G_T"] = g_t;
    if (deg != 2 * g_t) bad("(2)(iv): deg(T) != 2|G(T)|", {{"deg", deg}, {"G_T", g_t}});
    if (t != sp) {
      const std::size_t g_ts = graph_order(subquotient_lattice(lat, sp, t, caps));
      info["G_T_mod_S_prime"] = g_ts;
      if (deg != 2 * g_ts + 2) bad("(2)(iv): deg(T) != 2|G(T/S')|+2", {{"deg", deg}, {"G_T_mod_S_prime", g_ts}});
    } else {
      r.notes.push_back("(2)(iv) second equality not applicable at T=" + name_of(lat, t) +
                        ": T is simple, so T = S' and T/S' = 0");
    }
    checked.push_back(std::move(info));
  }
  r.metadata["maximal_low_degree"] = checked;
  if (checked.empty() && r.status != Status::Fail) {
    r.status = Status::Vacuous;
    r.notes.push_back("no maximal T with deg(T) < deg^c(T)");
  }
  return r;
}

CheckReport check_C5_matrix_triangular_shapes(Analysis& a) {
  auto r = start("C5-matrix-triangular-shapes", a);
  const auto& ring = a.instance().ring;
  const auto& lat = a.lattice();
  const auto& g = a.graph();
  const bool regular = a.instance().spec["module"]["kind"] == "regular";
  const auto backend = ring->backend();
  const bool matrix2 = backend == algebra::RingBackend::matrix && ring->info().matrix_dim == 2;
  if (!regular || !(matrix2 || backend == algebra::RingBackend::triangular)) {
    r.status = Status::Vacuous;
    r.notes.push_back("not the regular module of M2(F) or a triangular ring");
    return r;
  }
  const auto& field = *ring->info().field;
  const std::size_t q = field.size();
  const std::size_t alpha = g.order();
  r.metadata = {{"q", q}, {"alpha", alpha}, {"shape", graph::classify_shape(g.graph()).symbol()}};

  if (matrix2) {
    if (alpha != q + 1) fail(r, "alpha != q + 1", {{"alpha", alpha}, {"expected", q + 1}});
    for (std::size_t v = 0; v < alpha; ++v)
      if (g.degree(v) != 0) fail(r, "vertex of nonzero degree", {{"vertex", describe(lat, g.submodule(v))}});
    return r;
  }

  // Entries are [a, b, 0, c] with a, b in the field and c in the subfield.
  const std::uint32_t n = ring->size();
  Bits t_bits(n), s_prime(n), soc_bits(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto& c = ring->coordinates(x);
    if (c[0] == 0) t_bits.set(x);
    if (c[0] == 0 && c[3] == 0) s_prime.set(x);
    if (c[3] == 0) soc_bits.set(x);
  }
  const std::size_t t = lat.find(t_bits);
  if (t == Lattice::npos || t == lat.full()) {
    fail(r, "T = [0 D; 0 P] is not a proper left ideal", {});
    return r;
  }
  const std::size_t tv = g.vertex_of(t);
  r.metadata["T"] = describe(lat, t);
  if (!lat.is_maximal(t)) fail(r, "T is not maximal", {});
  // T is the only maximal left ideal with deg < deg^c.
  for (auto mx : maximal_submodules(lat)) {
    const std::size_t mv = g.vertex_of(mx);
    if (mx != t && g.degree(mv) < g.complement_degree(mv))
      fail(r, "another maximal left ideal has deg < deg^c", {{"other", describe(lat, mx)}});
  }
  if (g.degree(tv) != 2) fail(r, "deg(T) != 2", {{"deg", g.degree(tv)}});
  if (g.complement_degree(tv) != q) fail(r, "deg^c(T) != q", {{"deg_c", g.complement_degree(tv)}, {"q", q}});
  r.metadata["deg_T"] = g.degree(tv);
  r.metadata["deg_c_T"] = g.complement_degree(tv);

  // Neighbours of T: S' = [0 D; 0 0] and Soc = [D D; 0 0].
  std::set<std::size_t> expected_nbrs = {lat.find(s_prime), lat.find(soc_bits)};
  std::set<std::size_t> nbrs;
  g.graph().row(tv).for_each([&](std::size_t u) { nbrs.insert(g.submodule(u)); });
  if (nbrs != expected_nbrs) fail(r, "neighbours of T are not S' and S + S'", {});

  // Non-neighbours of T: exactly L_d = {[a, a d; 0, 0]} for d in the field.
  std::set<std::size_t> l_ds;
  for (std::uint32_t d = 0; d < q; ++d) {
    Bits ld(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      const auto& c = ring->coordinates(x);
      if (c[3] == 0 && c[1] == field.mul(c[0], d)) ld.set(x);
    }
    const std::size_t idx = lat.find(ld);
    if (idx == Lattice::npos) {
      fail(r, "L_d is not a left ideal", {{"d", field.label(d)}});
      continue;
    }
    l_ds.insert(idx);
  }
  std::set<std::size_t> zero_meet;
  for (std::size_t v = 0; v < alpha; ++v)
    if (v != tv && !g.graph().adjacent(v, tv)) zero_meet.insert(g.submodule(v));
  if (l_ds.size() != q || zero_meet != l_ds)
    fail(r, "left ideals meeting T trivially are not the q ideals L_d", {{"found", zero_meet.size()}, {"q", q}});
  if (alpha != q + 3) fail(r, "alpha != q + 3", {{"alpha", alpha}, {"expected", q + 3}});
  return r;
}

namespace {

bool homogeneous_precondition(Analysis& a, CheckReport& r) {
  if (graph::has_homogeneous_length_two_socle(a.lattice())) return true;
  r.status = Status::Vacuous;
  r.notes.push_back("socle is not an essential sum of two isomorphic simples");
  return false;
}

}  // namespace

CheckReport check_C6_socle_cliques(Analysis& a) {
  auto r = start("C6-socle-cliques", a);
  if (!homogeneous_precondition(a, r)) return r;
  const auto& lat = a.lattice();
  const auto& g = a.graph();
  const std::size_t soc = a.socle();

  // (iii) two vertices not containing Soc meet trivially or share their socle trace, which is simple.
  std::vector<std::size_t> outside;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!lat.leq(soc, g.submodule(v))) outside.push_back(v);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const std::size_t n1 = g.submodule(outside[i]), n2 = g.submodule(outside[j]);
      if (lat.meet(n1, n2) == lat.zero()) continue;
      const std::size_t t1 = lat.meet(n1, soc), t2 = lat.meet(n2, soc);
      if (t1 != t2 || !lat.is_simple(t1))
        fail(r, "(iii): socle traces differ or are not simple", {{"N1", describe(lat, n1)}, {"N2", describe(lat, n2)}});
    }
  // (iv) contains Soc or is uniform.
  for (auto v : outside)
    if (!lat.is_uniform(g.submodule(v)))
      fail(r, "(iv): vertex neither contains Soc nor is uniform", {{"N", describe(lat, g.submodule(v))}});
  // (v) maximal cliques are exactly the overlines of simples.
  std::set<std::vector<std::size_t>> cliques, overlines;
  for (const auto& c : graph::max_cliques(g.graph(), a.caps())) cliques.insert(c.vertices);
  for (auto s : lat.simples()) overlines.insert(graph::overline(g, g.vertex_of(s)));
  r.metadata = {{"max_cliques", cliques.size()}, {"simples", lat.simples().size()}};
  if (cliques != overlines) {
    json extra_c = json::array(), extra_o = json::array();
    for (const auto& c : cliques)
      if (!overlines.count(c)) extra_c.push_back(c);
    for (const auto& o : overlines)
      if (!cliques.count(o)) extra_o.push_back(o);
    fail(r, "(v): maximal cliques differ from the overlines", {{"cliques_only", extra_c}, {"overlines_only", extra_o}});
  }
  return r;
}

CheckReport check_C7_overline_coloring(Analysis& a) {
  auto r = start("C7-overline-coloring", a);
  if (!homogeneous_precondition(a, r)) return r;
  const auto& g = a.graph();
  const std::size_t omega = a.omega().size();
  const std::size_t chi = a.chi().count;
  r.metadata = {{"omega", omega}, {"chi", chi}};
  if (omega != chi) fail(r, "omega != chi", {{"omega", omega}, {"chi", chi}});
  const auto res = graph::color_by_overline(g);
  r.metadata["construction_selection"] = res.selection;
  if (!res.applicable()) {
    if (r.status != Status::Fail) {
      r.status = Status::ApplicabilityFailed;
      r.witness = {{"reason", res.failure}, {"vertices", res.witness}};
    }
    r.notes.push_back("overline construction not applicable: " + res.failure);
    return r;
  }
  const auto& c = *res.coloring;
  r.metadata["construction_colors"] = c.count;
  if (!graph::is_proper(g.graph(), c)) fail(r, "construction returned an improper coloring", {});
  if (c.count != omega) fail(r, "construction color count != omega", {{"colors", c.count}, {"omega", omega}});
  return r;
}

CheckReport check_C8_complement_coloring(Analysis& a) {
  auto r = start("C8-complement-coloring", a);
  const std::size_t omega = a.omega().size();
  const std::size_t omega_c = a.omega_c().size();
  r.metadata = {{"omega", omega}, {"omega_c", omega_c}};
  if (omega > omega_c) {
    r.status = Status::Vacuous;
    r.notes.push_back("omega > omega^c");
    return r;
  }
  const std::size_t chi_c = a.chi_c().count;
  r.metadata["chi_c"] = chi_c;
  if (omega_c != chi_c) fail(r, "omega^c != chi^c", {{"omega_c", omega_c}, {"chi_c", chi_c}});
  const auto res = graph::color_complement_by_uniform_clique(a.graph());
  r.metadata["construction_clique"] = res.selection;
  if (!res.applicable()) {
    if (r.status != Status::Fail) {
      r.status = Status::ApplicabilityFailed;
      r.witness = {{"reason", res.failure}, {"vertices", res.witness}};
    }
    r.notes.push_back("uniform-clique construction is not total: " + res.failure);
    return r;
  }
  const auto& c = *res.coloring;
  r.metadata["construction_colors"] = c.count;
  r.metadata["construction_within_omega"] = c.count <= omega;
  if (!graph::is_proper(a.complement(), c)) fail(r, "construction returned an improper coloring", {});
  if (c.count > omega) r.notes.push_back("construction uses more than omega colors");
  return r;
}

CheckReport check_C9_triangle_free(Analysis& a) {
  auto r = start("C9-triangle-free", a);
  const auto& lat = a.lattice();
  const auto& g = a.graph();
  const bool tf = graph::is_triangle_free(g.graph());
  const std::size_t omega = a.omega().size();
  const auto shape = graph::classify_shape(g.graph());
  r.metadata = {{"triangle_free", tf}, {"omega", omega}, {"shape", shape.symbol()}};
  if (tf != (omega <= 2)) fail(r, "triangle scan disagrees with omega", {{"omega", omega}});
  if (!tf) {
    if (auto tri = graph::find_triangle(g.graph())) r.metadata["triangle"] = *tri;
  }

  // Module trichotomy.
  const std::size_t soc = a.socle();
  const std::size_t len = a.length();
  const bool chain = is_chain(lat) && len <= 3;
  const bool semisimple2 = soc == lat.full() && two_simple_split(lat, soc).has_value();
  const auto maxes = maximal_submodules(lat);
  const bool soc_unique_max = soc != lat.full() && maxes.size() == 1 && maxes[0] == soc && two_simple_split(lat, soc);
  const bool module_type = chain || semisimple2 || soc_unique_max;
  r.metadata["module_type"] = chain ? "chain" : semisimple2 ? "two-simples" : soc_unique_max ? "socle-unique-maximal" : "none";
  if (tf != module_type) fail(r, "triangle-freeness does not match the module trichotomy", {{"triangle_free", tf}});
  if (tf) {
    const bool shape_ok = shape.tag == graph::ShapeTag::Null || shape.tag == graph::ShapeTag::Star ||
                          (shape.tag == graph::ShapeTag::Complete && shape.order <= 2);
    if (!shape_ok) fail(r, "triangle-free graph of unexpected shape", {{"shape", shape.symbol()}});
    if (graph::girth(g.graph())) fail(r, "triangle-free graph has a cycle", {{"girth", *graph::girth(g.graph())}});
  }

  // Ring trichotomy for regular modules.
  if (a.instance().spec["module"]["kind"] != "regular") return r;
  const auto& ring = *a.instance().ring;
  const auto rad = modules::prime_radical(a.instance().ring, a.caps());
  const Bits& beta = rad.lattice[rad.index].members;
  const std::size_t beta_idx = lat.find(beta);
  const std::size_t alpha = g.order();
  std::string ring_type = "none";
  bool shape_match = true;
  if (alpha == 0) {
    ring_type = "division";
  } else if (alpha == 1 && g.submodule(0) == beta_idx) {
    ring_type = "one-ideal";
    shape_match = shape.symbol() == "N1";
  } else if (alpha == 2 && g.submodule(1) == beta_idx &&
             lat[g.submodule(0)].members == modules::product_span(ring, beta, beta)) {
    ring_type = "two-ideals";
    shape_match = shape.symbol() == "K2";
  } else if (beta_idx == lat.zero() && len == 2) {
    const auto split = two_simple_split(lat, lat.full());
    if (split) {
      ring_type = "semisimple-length-2";
      const auto iso = iso_of(lat, split->first, split->second);
      shape_match = shape.tag == graph::ShapeTag::Null && alpha == iso + 2;
      if (iso == 0) r.notes.push_back("semisimple of length 2 with non-isomorphic simples: a product of two different fields");
    }
  } else if (beta_idx != lat.zero() && lat.is_maximal(beta_idx) && maximal_submodules(lat).size() == 1 &&
             modules::product_span(ring, beta, beta).count() == 1) {
    const auto split = two_simple_split(lat, beta_idx);
    if (split && iso_of(lat, split->first, split->second) > 0) {
      ring_type = "square-zero-radical";
      const std::size_t delta = ring.size() / beta.count();
      shape_match = shape.tag == graph::ShapeTag::Star && alpha == delta + 2;
      r.metadata["delta"] = delta;
    }
  }
  r.metadata["ring_type"] = ring_type;
  if (tf != (ring_type != "none")) fail(r, "triangle-freeness does not match the ring trichotomy", {{"ring_type", ring_type}});
  if (!shape_match) fail(r, "ring type predicts a different graph", {{"ring_type", ring_type}, {"shape", shape.symbol()}});
  return r;
}

CheckReport check_C10_connectivity(Analysis& a) {
  auto r = start("C10-connectivity", a);
  const auto& lat = a.lattice();
  const auto& g = a.graph();
  if (g.order() == 0) {
    r.status = Status::Vacuous;
    r.notes.push_back("empty graph");
    return r;
  }
  const bool connected = graph::is_connected(g.graph());
  const bool two_simples = a.socle() == lat.full() && two_simple_split(lat, lat.full()).has_value();
  const auto diam = graph::diameter(g.graph());
  r.metadata = {{"connected", connected}, {"two_simples", two_simples}};
  if (diam) r.metadata["diameter"] = *diam;
  if (connected == two_simples) fail(r, "connectivity does not match the two-simples criterion", {{"connected", connected}});
  if (connected && g.order() >= 2 && (!diam || *diam > 2)) fail(r, "diameter exceeds 2", {{"diameter", diam ? *diam : 0}});
  return r;
}

CheckReport check_C11_structural_predicates(Analysis& a) {
  auto r = start("C11-structural-predicates", a);
  const auto& lat = a.lattice();
  const auto& g = a.graph();
  const auto& caps = a.caps();
  const std::size_t alpha = g.order();

  // Maximal T: complement S, essential S' isomorphic to S, |End(S)|, |G(M/S')|.
  json maximal = json::array();
  for (auto t : maximal_submodules(lat)) {
    json e = {{"T", describe(lat, t)}};
    std::optional<std::size_t> s;
    for (auto x : lat.simples())
      if (lat.meet(x, t) == lat.zero() && lat.join(x, t) == lat.full()) {
        s = x;
        break;
      }
    e["complement_simple"] = s.has_value();
    const auto inside = atoms_below(lat, t);
    const bool unique_essential = inside.size() == 1;
    e["unique_essential_simple"] = unique_essential;
    if (s) e["end_S"] = end_of(lat, *s);
    if (s && unique_essential) {
      e["S_prime_iso_S"] = iso_of(lat, *s, inside[0]) > 0;
      const std::size_t gq = graph_order(quotient_lattice(lat, inside[0], caps));
      e["G_M_mod_S_prime"] = gq;
      e["G_M_mod_S_prime_plus_1_below_alpha"] = gq + 1 < alpha;
      e["end_S_equals_alpha"] = end_of(lat, *s) == alpha;
    }
    maximal.push_back(std::move(e));
  }
  r.metadata["maximal_submodules"] = std::move(maximal);

  // Vertices with a unique simple S: |End(S)|, deg(S), and B <= A with N meet A = 0, A/B = S.
  json vertices = json::array();
  for (std::size_t v = 0; v < alpha; ++v) {
    const std::size_t n = g.submodule(v);
    const auto inside = atoms_below(lat, n);
    if (inside.size() != 1) continue;
    const std::size_t s = inside[0];
    json e = {{"N", describe(lat, n)}, {"S", describe(lat, s)}, {"end_S", end_of(lat, s)},
              {"deg_S", g.degree(g.vertex_of(s))}};
    json witness = nullptr;
    for (std::size_t aidx = 1; aidx < lat.size() && witness.is_null(); ++aidx) {
      if (lat.meet(aidx, n) != lat.zero()) continue;
      for (auto b : lat.below(aidx)) {
        if (b == aidx) continue;
        const auto cov = modules::covers(lat, b);
        if (std::find(cov.begin(), cov.end(), aidx) == cov.end()) continue;
        if (modules::hom_count_between_subquotients(lat, b, aidx, lat.join(b, s)) > 1) {
          witness = {{"A", name_of(lat, aidx)}, {"B", name_of(lat, b)}};
          break;
        }
      }
    }
    e["section_iso_S"] = witness;
    vertices.push_back(std::move(e));
  }
  r.metadata["vertices_with_unique_simple"] = std::move(vertices);

  // A quotient containing two isomorphic simples.
  if (auto w = modules::find_double_simple_image(lat))
    r.metadata["double_simple_image"] = {{"kernel", name_of(lat, w->kernel)},
                                         {"first", name_of(lat, w->first)},
                                         {"second", name_of(lat, w->second)},
                                         {"end", modules::hom_count_between_subquotients(lat, w->kernel, w->first,
                                                                                          w->first)}};
  else
    r.metadata["double_simple_image"] = nullptr;
  r.notes.push_back("report only: the infinitude clauses are not representable");
  return r;
}

const std::vector<CheckInfo>& all_checks() {
  static const std::vector<CheckInfo> checks = {
      {"C1-iso-counts", "S1+S2 has |Iso(S1,S2)|+2 nontrivial submodules", check_C1_iso_counts},
      {"C2-low-degree", "degree 0 and degree 1 vertices", check_C2_low_degree},
      {"C3-length-additivity", "l(M) = l(N) + l(M/N)", check_C3_length_additivity},
      {"C4-maximal-low-degree", "maximal T with deg(T) < deg^c(T)", check_C4_maximal_low_degree},
      {"C5-matrix-triangular-shapes", "graphs of M2(F) and triangular rings", check_C5_matrix_triangular_shapes},
      {"C6-socle-cliques", "maximal cliques are overlines of simples", check_C6_socle_cliques},
      {"C7-overline-coloring", "omega = chi via the overline coloring", check_C7_overline_coloring},
      {"C8-complement-coloring", "omega^c = chi^c when omega <= omega^c", check_C8_complement_coloring},
      {"C9-triangle-free", "triangle-free classification", check_C9_triangle_free},
      {"C10-connectivity", "connectivity and diameter", check_C10_connectivity},
      {"C11-structural-predicates", "structural clauses (report only)", check_C11_structural_predicates},
  };
  return checks;
}

std::vector<CheckInfo> resolve_checks(const std::string& list) {
  const auto& checks = all_checks();
  if (list.empty() || list == "all") return checks;
  std::vector<bool> chosen(checks.size(), false);
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    bool found = false;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& id = checks[i].id;
      if (id == item || id.substr(0, id.find('-')) == item) {
        chosen[i] = true;
        found = true;
      }
    }
    if (!found) throw InvalidInput("unknown check '" + item + "'");
  }
  std::vector<CheckInfo> out;
  for (std::size_t i = 0; i < checks.size(); ++i)
    if (chosen[i]) out.push_back(checks[i]);
  return out;
}

CheckReport run_check(const CheckInfo& check, Analysis& a) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = check.fn(a);
  } catch (const CapExceeded& e) {
    r = CheckReport{};
    r.check = check.id;
    r.instance = a.instance().name;
    r.instance_id = a.instance().id;
    r.status = Status::Skipped;
    r.notes.push_back(std::string("cap exceeded: ") + e.what());
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json Summary::to_json() const {
  return {{"counts", counts}, {"warnings", warnings}, {"failures", failures}};
}

std::string Summary::table() const {
  static const std::vector<std::string> cols = {"PASS", "FAIL", "VACUOUS", "APPLICABILITY-FAILED", "SKIPPED"};
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-28s %6s %6s %8s %21s %8s\n", "check", "PASS", "FAIL", "VACUOUS",
                "APPLICABILITY-FAILED", "SKIPPED");
  out << buf;
  for (const auto& check : all_checks()) {
    const auto it = counts.find(check.id);
    if (it == counts.end()) continue;
    auto get = [&](const std::string& s) {
      const auto jt = it->second.find(s);
      return jt == it->second.end() ? std::size_t{0} : jt->second;
    };
    std::snprintf(buf, sizeof buf, "%-28s %6zu %6zu %8zu %21zu %8zu\n", check.id.c_str(), get(cols[0]), get(cols[1]),
                  get(cols[2]), get(cols[3]), get(cols[4]));
    out << buf;
  }
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

SuiteResult run_suite(const zoo::InstanceFamily& family, const std::vector<CheckInfo>& checks, const Caps& caps) {
  SuiteResult result;
  for (const auto& def : family) {
    std::optional<Analysis> analysis;
    std::string skip_reason;
    try {
      analysis.emplace(def.build(caps));
    } catch (const CapExceeded& e) {
      skip_reason = std::string("cap exceeded: ") + e.what();
    }
    for (const auto& check : checks) {
      if (analysis) {
        result.reports.push_back(run_check(check, *analysis));
      } else {
        CheckReport r;
        r.check = check.id;
        r.instance = def.name;
        r.instance_id = def.id;
        r.status = Status::Skipped;
        r.notes.push_back(skip_reason);
        result.reports.push_back(std::move(r));
      }
    }
  }
  auto check_rank = [&](const std::string& id) {
    const auto& all = all_checks();
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].id == id) return i;
    return all.size();
  };
  std::stable_sort(result.reports.begin(), result.reports.end(), [&](const CheckReport& x, const CheckReport& y) {
    if (x.instance_id != y.instance_id) return x.instance_id < y.instance_id;
    return check_rank(x.check) < check_rank(y.check);
  });

  auto& s = result.summary;
  std::map<std::string, std::size_t> non_vacuous;
  for (const auto& check : checks) {
    s.counts[check.id];
    non_vacuous[check.id] = 0;
  }
  for (const auto& r : result.reports) {
    ++s.counts[r.check][to_string(r.status)];
    if (r.status == Status::Fail) ++s.failures;
    if (r.status != Status::Vacuous && r.status != Status::Skipped) ++non_vacuous[r.check];
  }
  if (!family.empty())
    for (const auto& check : checks)
      if (non_vacuous[check.id] == 0) s.warnings.push_back(check.id + " was vacuous or skipped on every instance");
  return result;
}

}  // namespace modgraph::verify
