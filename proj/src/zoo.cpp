#include "modgraph/zoo.hpp"

#include <algorithm>

#include "modgraph/construct.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/field.hpp"
#include "modgraph/solver.hpp"

namespace modgraph::zoo {

using nlohmann::json;

InstanceDef make_def(std::string name, const json& s) {
  InstanceDef d;
  d.name = std::move(name);
  d.spec = spec::normalize(s);
  d.id = spec::canonical_id(d.spec);
  return d;
}

std::vector<InstanceDef> named_instances() {
  std::vector<InstanceDef> out;
  auto add = [&](std::string name, json ring, json module = spec::regular()) {
    out.push_back(make_def(std::move(name), spec::instance(std::move(ring), std::move(module))));
  };
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}})
    add("M2(F" + std::to_string(p == 2 && k == 2 ? 4 : p) + ")/regular", spec::matrix(p, k, 2));
  add("triangular(F4,F2)/regular", spec::triangular(2, 2, 1));
  add("triangular(F8,F2)/regular", spec::triangular(2, 3, 1));
  add("triangular(F9,F3)/regular", spec::triangular(3, 2, 1));
  for (unsigned n : {4u, 8u, 12u, 16u, 36u}) add("Z/" + std::to_string(n) + "/regular", spec::zmod(n));
  add("F2[x]/(x^2)/regular", spec::poly_quot(2, {"x"}, {"x^2"}));
  add("F2[x]/(x^3)/regular", spec::poly_quot(2, {"x"}, {"x^3"}));
  add("F3[x]/(x^2)/regular", spec::poly_quot(3, {"x"}, {"x^2"}));
  add("F2[x,y]/(x^2,x*y,y^2)/regular", spec::poly_quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"}));
  add("F3[x,y]/(x^2,x*y,y^2)/regular", spec::poly_quot(3, {"x", "y"}, {"x^2", "x*y", "y^2"}));
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}})
    add("gf(" + std::to_string(p) + "," + std::to_string(k) + ")^2/selfsum", spec::gf(p, k),
        spec::direct_sum(spec::regular(), spec::regular()));
  add("Z/6/F2+F3", spec::zmod(6),
      spec::direct_sum(spec::quotient(spec::regular(), {2}), spec::quotient(spec::regular(), {3})));
  add("Z/4/Z2+Z4", spec::zmod(4), spec::direct_sum(spec::quotient(spec::regular(), {2}), spec::regular()));
  add("Z/9/Z3+Z9", spec::zmod(9), spec::direct_sum(spec::quotient(spec::regular(), {3}), spec::regular()));
  add("F2xF2/regular", spec::product(spec::gf(2, 1), spec::gf(2, 1)));
  add("F3xF3/regular", spec::product(spec::gf(3, 1), spec::gf(3, 1)));
  return out;
}

namespace {

struct RingDef {
  json spec;
  std::size_t size;
};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<RingDef> base_rings(std::size_t cap) {
  std::vector<RingDef> out;
  // Z/p is the same ring as F_p, which the field list covers.
  for (std::size_t n = 4; n <= cap; ++n)
    if (!algebra::is_prime(n)) out.push_back({spec::zmod(static_cast<std::uint32_t>(n)), n});
  for (std::uint32_t p = 2; p <= cap; ++p) {
    if (!algebra::is_prime(p)) continue;
    for (unsigned k = 1; ipow(p, k) <= cap; ++k) out.push_back({spec::gf(p, k), ipow(p, k)});
  }
  for (std::uint32_t p = 2; p <= cap; ++p) {
    if (!algebra::is_prime(p)) continue;
    for (unsigned k = 1; ipow(p, k) <= cap; ++k) {
      const std::size_t q = ipow(p, k);
      for (unsigned m = 2; ipow(q, m * m) <= cap; ++m) out.push_back({spec::matrix(p, k, m), ipow(q, m * m)});
      for (unsigned j = 1; j <= k; ++j)
        if (k % j == 0 && q * q * ipow(p, j) <= cap) out.push_back({spec::triangular(p, k, j), q * q * ipow(p, j)});
    }
  }
  for (std::uint32_t p = 2; p <= cap; ++p) {
    if (!algebra::is_prime(p)) continue;
    for (unsigned k = 2; ipow(p, k) <= cap; ++k)
      out.push_back({spec::poly_quot(p, {"x"}, {"x^" + std::to_string(k)}), ipow(p, k)});
    if (ipow(p, 3) <= cap) out.push_back({spec::poly_quot(p, {"x", "y"}, {"x^2", "x*y", "y^2"}), ipow(p, 3)});
    if (ipow(p, 4) <= cap) out.push_back({spec::poly_quot(p, {"x", "y"}, {"x^2", "y^2"}), ipow(p, 4)});
  }
  const std::size_t n = out.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (out[a].size * out[b].size <= cap) out.push_back({spec::product(out[a].spec, out[b].spec), out[a].size * out[b].size});
  return out;
}

bool passes(const std::string& filter, const InstanceDef& def, const Caps& caps) {
  if (filter == "all") return true;
  if (filter == "regular") return def.spec["module"]["kind"] == "regular";
  try {
    const auto inst = def.build(caps);
    auto lat = std::make_shared<const modules::Lattice>(modules::enumerate_submodules(inst.module, caps));
    if (filter == "socle-homogeneous-2") return graph::has_homogeneous_length_two_socle(*lat);
    const auto g = graph::build_graph(lat);
    return graph::is_triangle_free(g.graph());
  } catch (const CapExceeded&) {
    return false;
  }
}

}  // namespace

InstanceFamily family(const std::string& filter, const FamilyParams& params, const Caps& caps) {
  static const std::vector<std::string> known = {"all", "empty", "regular", "triangle-free", "socle-homogeneous-2"};
  if (std::find(known.begin(), known.end(), filter) == known.end())
    throw InvalidInput("unknown family filter '" + filter + "'");
  if (params.max_ring_size > caps.max_ring_size)
    throw CapExceeded("family ring size " + std::to_string(params.max_ring_size) + " exceeds max ring size " +
                      std::to_string(caps.max_ring_size));
  InstanceFamily fam;
  fam.name = "family:" + filter + ":" + std::to_string(params.max_ring_size);
  if (filter == "empty") return fam;
  for (const auto& r : base_rings(params.max_ring_size)) {
    std::vector<InstanceDef> defs;
    defs.push_back(make_def({}, spec::instance(r.spec)));
    if (params.max_sum_size && r.size * r.size <= params.max_sum_size)
      defs.push_back(make_def({}, spec::instance(r.spec, spec::direct_sum(spec::regular(), spec::regular()))));
    for (auto& d : defs) {
      // Names come from the built ring so they read like the named zoo.
      const auto inst = d.build(caps);
      d.name = inst.name;
      if (passes(filter, d, caps)) fam.members.push_back(std::move(d));
    }
  }
  return fam;
}

InstanceFamily resolve(const std::string& name, const Caps& caps) {
  if (name == "named") return InstanceFamily{"named", named_instances()};
  if (name.rfind("family:", 0) == 0) {
    const auto rest = name.substr(7);
    const auto colon = rest.find(':');
    FamilyParams params;
    std::string filter = rest;
    if (colon != std::string::npos) {
      filter = rest.substr(0, colon);
      try {
        std::size_t used = 0;
        params.max_ring_size = std::stoul(rest.substr(colon + 1), &used);
        if (used != rest.size() - colon - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InvalidInput("bad family size in '" + name + "'");
      }
    }
    return family(filter, params, caps);
  }
  throw InvalidInput("unknown family '" + name + "' (expected named or family:<filter>:<size>)");
}

}  // namespace modgraph::zoo
