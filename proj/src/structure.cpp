#include "modgraph/structure.hpp"

#include <algorithm>
#include <set>

#include "modgraph/errors.hpp"

namespace modgraph::modules {

std::size_t socle(const Lattice& lat) {
  Bits acc = lat[lat.zero()].members;
  for (auto a : lat.simples()) acc = sum_of(lat.module(), acc, lat[a].members);
  return lat.find(acc);
}

UBasis u_basis(const Lattice& lat) {
  UBasis basis;
  Bits sum = lat[lat.zero()].members;
  std::size_t sum_size = 1;
  for (std::size_t i = 1; i < lat.size(); ++i) {
    if (!lat.is_uniform(i)) continue;
    Bits next = sum_of(lat.module(), sum, lat[i].members);
    const std::size_t sz = next.count();
    if (sz == sum_size * lat[i].size()) {
      basis.members.push_back(i);
      sum = std::move(next);
      sum_size = sz;
    }
  }
  return basis;
}

std::size_t goldie_dimension(const Lattice& lat) { return u_basis(lat).members.size(); }

std::size_t composition_length(const Lattice& lat) { return lat.interval_length(lat.zero(), lat.full()); }

bool is_direct_sum(const FiniteModule& m, const std::vector<Bits>& family) {
  Bits sum(m.size());
  sum.set(0);
  std::size_t expected = 1;
  for (const auto& f : family) {
    sum = sum_of(m, sum, f);
    expected *= f.count();
    if (sum.count() != expected) return false;
  }
  return true;
}

bool is_simple_module(const FiniteModule& m) {
  if (m.size() < 2) return false;
  const auto cyc = cyclic_submodules(m);
  for (std::uint32_t x = 1; x < m.size(); ++x)
    if (cyc[x].count() != m.size()) return false;
  return true;
}

std::uint64_t hom_count_from_simple(const FiniteModule& a, const Bits& s, const FiniteModule& b, const Bits& t) {
  if (&a.ring() != &b.ring()) throw InvalidInput("hom count: modules over different rings");
  const std::size_t x = [&] {
    std::size_t first = 0;
    s.for_each([&](std::size_t v) {
      if (v != 0 && first == 0) first = v;
    });
    return first;
  }();
  if (x == 0) throw InvalidInput("hom count: source is the zero module");
  const auto& r = a.ring();
  std::vector<std::uint32_t> ann;
  for (std::uint32_t e = 0; e < r.size(); ++e)
    if (a.act(e, static_cast<std::uint32_t>(x)) == 0) ann.push_back(e);
  std::uint64_t count = 0;
  t.for_each([&](std::size_t y) {
    for (auto e : ann)
      if (b.act(e, static_cast<std::uint32_t>(y)) != 0) return;
    ++count;
  });
  return count;
}

std::uint64_t iso_count(const FiniteModule& a, const Bits& s, const FiniteModule& b, const Bits& t) {
  if (s.count() != t.count()) return 0;
  return hom_count_from_simple(a, s, b, t) - 1;
}

namespace {

Bits full_bits(const FiniteModule& m) {
  Bits b(m.size());
  for (std::uint32_t x = 0; x < m.size(); ++x) b.set(x);
  return b;
}

}  // namespace

std::uint64_t count_iso_simple(const FiniteModule& s, const FiniteModule& t) {
  if (!is_simple_module(s) || !is_simple_module(t)) throw InvalidInput("count_iso_simple: input module is not simple");
  return iso_count(s, full_bits(s), t, full_bits(t));
}

std::uint64_t end_size(const FiniteModule& s) {
  if (!is_simple_module(s)) throw InvalidInput("end_size: input module is not simple");
  const Bits all = full_bits(s);
  return hom_count_from_simple(s, all, s, all);
}

std::vector<std::size_t> covers(const Lattice& lat, std::size_t i) {
  const auto& m = lat.module();
  const Bits& k = lat[i].members;
  std::set<std::size_t> candidates;
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    if (k.test(x)) continue;
    candidates.insert(lat.find(sum_of(m, k, lat.cyclic()[x])));
  }
  std::vector<std::size_t> out;
  for (auto c : candidates) {
    bool minimal = true;
    for (auto d : candidates)
      if (d != c && lat.leq(d, c)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

std::uint64_t hom_count_between_subquotients(const Lattice& lat, std::size_t kernel, std::size_t x, std::size_t y) {
  const auto& m = lat.module();
  const auto& r = m.ring();
  const Bits& k = lat[kernel].members;
  std::size_t gen = m.size();
  lat[x].members.for_each([&](std::size_t v) {
    if (gen == m.size() && !k.test(v)) gen = v;
  });
  if (gen == m.size()) throw InvalidInput("hom count: source subquotient is zero");
  std::vector<std::uint32_t> ann;
  for (std::uint32_t e = 0; e < r.size(); ++e)
    if (k.test(m.act(e, static_cast<std::uint32_t>(gen)))) ann.push_back(e);
  std::uint64_t count = 0;
  lat[y].members.for_each([&](std::size_t t) {
    for (auto e : ann)
      if (!k.test(m.act(e, static_cast<std::uint32_t>(t)))) return;
    ++count;
  });
  return count / k.count();
}

std::optional<DoubleSimpleWitness> double_simple_image_at(const Lattice& lat, std::size_t kernel) {
  const auto cv = covers(lat, kernel);
  for (std::size_t a = 0; a < cv.size(); ++a)
    for (std::size_t b = a + 1; b < cv.size(); ++b) {
      if (lat.meet(cv[a], cv[b]) != kernel) continue;
      if (lat[cv[a]].size() != lat[cv[b]].size()) continue;
      if (hom_count_between_subquotients(lat, kernel, cv[a], cv[b]) > 1) return DoubleSimpleWitness{kernel, cv[a], cv[b]};
    }
  return std::nullopt;
}

std::optional<DoubleSimpleWitness> find_double_simple_image(const Lattice& lat) {
  for (std::size_t k = 0; k < lat.full(); ++k)
    if (auto w = double_simple_image_at(lat, k)) return w;
  return std::nullopt;
}

Bits product_span(const algebra::FiniteRing& r, const Bits& a, const Bits& b) {
  Bits span(r.size());
  span.set(0);
  a.for_each([&](std::size_t x) {
    b.for_each([&](std::size_t y) {
      const std::uint32_t p = r.mul(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
      if (span.test(p)) return;
      // span is an additive subgroup; extend by the cyclic group of p.
      const auto base = span.members();
      std::uint32_t t = p;
      while (!span.test(t)) {
        for (auto s : base) span.set(r.add(s, t));
        t = r.add(t, p);
      }
    });
  });
  return span;
}

PrimeRadical prime_radical(std::shared_ptr<const algebra::FiniteRing> ring, const Caps& caps) {
  auto mod = std::make_shared<const FiniteModule>(regular_module(ring, caps));
  Lattice lat = enumerate_submodules(mod, caps);
  const auto& r = *ring;
  Bits rad = lat[lat.full()].members;
  for (std::size_t i = 0; i < lat.full(); ++i)
    if (lat.is_maximal(i)) rad &= lat[i].members;
  const std::size_t idx = lat.find(rad);
  if (idx == Lattice::npos) throw std::logic_error("prime_radical: intersection is not a left ideal");

  // Two-sided.
  rad.for_each([&](std::size_t j) {
    for (std::uint32_t e = 0; e < r.size(); ++e)
      if (!rad.test(r.mul(static_cast<std::uint32_t>(j), e)))
        throw std::logic_error("prime_radical: radical is not a two-sided ideal");
  });
  // Nilpotent.
  std::size_t k = 1;
  Bits power = rad;
  while (power.count() > 1) {
    Bits next = product_span(r, power, rad);
    if (next == power) throw std::logic_error("prime_radical: radical is not nilpotent");
    power = std::move(next);
    ++k;
  }
  // Annihilates minimal left ideals.
  for (auto a : lat.simples())
    rad.for_each([&](std::size_t j) {
      lat[a].members.for_each([&](std::size_t x) {
        if (r.mul(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(x)) != 0)
          throw std::logic_error("prime_radical: radical does not annihilate a minimal left ideal");
      });
    });
  return PrimeRadical{std::move(lat), idx, k};
}

}  // namespace modgraph::modules
