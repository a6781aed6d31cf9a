#include "modgraph/module.hpp"

#include <random>

#include "modgraph/errors.hpp"

namespace modgraph::modules {

std::string FiniteModule::label(std::uint32_t x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

FiniteModule FiniteModule::from_tables(std::shared_ptr<const FiniteRing> ring, std::uint32_t m,
                                       std::vector<std::uint32_t> add, std::vector<std::uint32_t> act,
                                       std::string name, std::vector<std::string> labels, const Caps& caps) {
  if (!ring) throw InvalidInput("module requires a ring");
  if (m == 0) throw InvalidInput("module carrier must be non-empty");
  if (m > caps.max_module_size)
    throw CapExceeded("module size " + std::to_string(m) + " exceeds max module size " +
                      std::to_string(caps.max_module_size));
  const std::size_t n = ring->size();
  if (add.size() != std::size_t{m} * m) throw InvalidInput("module addition table must be m x m");
  if (act.size() != n * m) throw InvalidInput("module action table must be |R| x m");
  for (auto v : add)
    if (v >= m) throw InvalidInput("module addition entry out of range");
  for (auto v : act)
    if (v >= m) throw InvalidInput("module action entry out of range");

  FiniteModule mod;
  mod.ring_ = std::move(ring);
  mod.m_ = m;
  mod.add_ = std::move(add);
  mod.act_ = std::move(act);
  mod.name_ = std::move(name);
  mod.labels_ = std::move(labels);
  mod.neg_.assign(m, m);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y)
      if (mod.add(x, y) == 0) {
        mod.neg_[x] = y;
        break;
      }
  verify_module_axioms(mod, caps);
  return mod;
}

void verify_module_axioms(const FiniteModule& mod, const Caps& caps) {
  const std::uint32_t m = mod.size();
  const auto& r = mod.ring();
  const std::uint32_t n = r.size();
  auto fail = [&](const std::string& what) { throw InvalidInput("module " + mod.name() + ": " + what + " fails"); };
  for (std::uint32_t x = 0; x < m; ++x) {
    if (mod.add(0, x) != x) fail("additive identity");
    if (mod.neg(x) >= m) fail("additive inverse");
    if (mod.act(1, x) != x) fail("unital action");
    for (std::uint32_t y = 0; y < m; ++y)
      if (mod.add(x, y) != mod.add(y, x)) fail("additive commutativity");
  }
  auto check_add = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    if (mod.add(mod.add(x, y), z) != mod.add(x, mod.add(y, z))) fail("additive associativity");
  };
  auto check_act = [&](std::uint32_t a, std::uint32_t b, std::uint32_t x, std::uint32_t y) {
    if (mod.act(a, mod.add(x, y)) != mod.add(mod.act(a, x), mod.act(a, y))) fail("r(x+y) = rx+ry");
    if (mod.act(r.add(a, b), x) != mod.add(mod.act(a, x), mod.act(b, x))) fail("(r+s)x = rx+sx");
    if (mod.act(r.mul(a, b), x) != mod.act(a, mod.act(b, x))) fail("(rs)x = r(sx)");
  };
  const std::size_t limit = caps.exhaustive_axiom_limit;
  if (m <= limit) {
    for (std::uint32_t x = 0; x < m; ++x)
      for (std::uint32_t y = 0; y < m; ++y)
        for (std::uint32_t z = 0; z < m; ++z) check_add(x, y, z);
  }
  if (m <= limit && n <= limit) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t x = 0; x < m; ++x) {
        for (std::uint32_t y = 0; y < m; ++y)
          if (mod.act(a, mod.add(x, y)) != mod.add(mod.act(a, x), mod.act(a, y))) fail("r(x+y) = rx+ry");
        for (std::uint32_t b = 0; b < n; ++b) {
          if (mod.act(r.add(a, b), x) != mod.add(mod.act(a, x), mod.act(b, x))) fail("(r+s)x = rx+sx");
          if (mod.act(r.mul(a, b), x) != mod.act(a, mod.act(b, x))) fail("(rs)x = r(sx)");
        }
      }
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint32_t> pick_r(0, n - 1), pick_m(0, m - 1);
  for (std::size_t i = 0; i < caps.sampled_axiom_checks; ++i) {
    if (m > limit) check_add(pick_m(rng), pick_m(rng), pick_m(rng));
    check_act(pick_r(rng), pick_r(rng), pick_m(rng), pick_m(rng));
  }
}

bool canonical_less(const Submodule& a, const Submodule& b) {
  const auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return member_list_less(a.members, b.members);
}

FiniteModule regular_module(std::shared_ptr<const FiniteRing> ring, const Caps& caps) {
  const std::uint32_t n = ring->size();
  std::vector<std::uint32_t> add(std::size_t{n} * n), act(std::size_t{n} * n);
  std::vector<std::string> labels(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    labels[a] = ring->label(a);
    for (std::uint32_t b = 0; b < n; ++b) {
      add[std::size_t{a} * n + b] = ring->add(a, b);
      act[std::size_t{a} * n + b] = ring->mul(a, b);
    }
  }
  std::string name = ring->name();
  return FiniteModule::from_tables(std::move(ring), n, std::move(add), std::move(act), name, std::move(labels), caps);
}

FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b, const Caps& caps) {
  if (a.ring_ptr() != b.ring_ptr()) throw InvalidInput("direct_sum: summands are over different rings");
  const std::uint64_t m64 = std::uint64_t{a.size()} * b.size();
  if (m64 > caps.max_module_size)
    throw CapExceeded("direct_sum: module size " + std::to_string(m64) + " exceeds max module size " +
                      std::to_string(caps.max_module_size));
  const auto m = static_cast<std::uint32_t>(m64);
  const std::uint32_t mb = b.size();
  const std::uint32_t n = a.ring().size();
  std::vector<std::uint32_t> add(std::size_t{m} * m), act(std::size_t{n} * m);
  std::vector<std::string> labels(m);
  for (std::uint32_t x = 0; x < m; ++x) {
    labels[x] = "(" + a.label(x / mb) + "," + b.label(x % mb) + ")";
    for (std::uint32_t y = 0; y < m; ++y)
      add[std::size_t{x} * m + y] = a.add(x / mb, y / mb) * mb + b.add(x % mb, y % mb);
    for (std::uint32_t r = 0; r < n; ++r) act[std::size_t{r} * m + x] = a.act(r, x / mb) * mb + b.act(r, x % mb);
  }
  return FiniteModule::from_tables(a.ring_ptr(), m, std::move(add), std::move(act),
                                   "(" + a.name() + ")+(" + b.name() + ")", std::move(labels), caps);
}

bool is_submodule(const FiniteModule& m, const Bits& n) {
  if (n.width() != m.size() || !n.test(0)) return false;
  const auto mem = n.members();
  for (auto x : mem) {
    for (auto y : mem)
      if (!n.test(m.add(x, y))) return false;
    for (std::uint32_t r = 0; r < m.ring().size(); ++r)
      if (!n.test(m.act(r, x))) return false;
  }
  return true;
}

QuotientModule quotient(const FiniteModule& m, const Bits& n, const Caps& caps) {
  if (!is_submodule(m, n)) throw InvalidInput("quotient: kernel is not a submodule");
  const std::uint32_t size = m.size();
  constexpr std::uint32_t unassigned = ~0u;
  std::vector<std::uint32_t> proj(size, unassigned), reps;
  const auto kernel = n.members();
  for (std::uint32_t x = 0; x < size; ++x) {
    if (proj[x] != unassigned) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto k : kernel) proj[m.add(x, k)] = c;
  }
  const auto q = static_cast<std::uint32_t>(reps.size());
  const std::uint32_t nr = m.ring().size();
  std::vector<std::uint32_t> add(std::size_t{q} * q), act(std::size_t{nr} * q);
  std::vector<std::string> labels(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    labels[a] = "[" + m.label(reps[a]) + "]";
    for (std::uint32_t b = 0; b < q; ++b) add[std::size_t{a} * q + b] = proj[m.add(reps[a], reps[b])];
    for (std::uint32_t r = 0; r < nr; ++r) act[std::size_t{r} * q + a] = proj[m.act(r, reps[a])];
  }
  auto mod = FiniteModule::from_tables(m.ring_ptr(), q, std::move(add), std::move(act), m.name() + "/N",
                                       std::move(labels), caps);
  return {std::move(mod), std::move(proj), std::move(reps)};
}

RestrictedModule restrict_to(const FiniteModule& m, const Bits& n, const Caps& caps) {
  if (!is_submodule(m, n)) throw InvalidInput("restrict_to: not a submodule");
  const auto mem = n.members();
  const auto k = static_cast<std::uint32_t>(mem.size());
  std::vector<std::uint32_t> local(m.size(), 0);
  for (std::uint32_t i = 0; i < k; ++i) local[mem[i]] = i;
  const std::uint32_t nr = m.ring().size();
  std::vector<std::uint32_t> add(std::size_t{k} * k), act(std::size_t{nr} * k);
  std::vector<std::string> labels(k);
  for (std::uint32_t a = 0; a < k; ++a) {
    labels[a] = m.label(mem[a]);
    for (std::uint32_t b = 0; b < k; ++b) add[std::size_t{a} * k + b] = local[m.add(mem[a], mem[b])];
    for (std::uint32_t r = 0; r < nr; ++r) act[std::size_t{r} * k + a] = local[m.act(r, mem[a])];
  }
  auto mod =
      FiniteModule::from_tables(m.ring_ptr(), k, std::move(add), std::move(act), m.name() + "|N", std::move(labels), caps);
  return {std::move(mod), mem};
}

std::vector<Bits> cyclic_submodules(const FiniteModule& m) {
  std::vector<Bits> out;
  out.reserve(m.size());
  const std::uint32_t nr = m.ring().size();
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    Bits b(m.size());
    for (std::uint32_t r = 0; r < nr; ++r) b.set(m.act(r, x));
    out.push_back(std::move(b));
  }
  return out;
}

Bits sum_of(const FiniteModule& m, const Bits& a, const Bits& b) {
  Bits result = a;
  const auto amem = a.members();
  b.for_each([&](std::size_t y) {
    if (result.test(y)) return;
    for (auto x : amem) result.set(m.add(x, static_cast<std::uint32_t>(y)));
  });
  return result;
}

namespace {

Bits cyclic_of(const FiniteModule& m, std::uint32_t x) {
  Bits b(m.size());
  for (std::uint32_t r = 0; r < m.ring().size(); ++r) b.set(m.act(r, x));
  return b;
}

}  // namespace

Submodule submodule_generated(const FiniteModule& m, const std::vector<std::uint32_t>& gens) {
  Bits cur(m.size());
  cur.set(0);
  for (auto g : gens) {
    if (g >= m.size()) throw InvalidInput("submodule_generated: generator out of range");
    if (!cur.test(g)) cur = sum_of(m, cur, cyclic_of(m, g));
  }
  Submodule s;
  s.members = cur;
  std::vector<Bits> none;
  s.generators = canonical_generators(m, cur, none);
  return s;
}

std::vector<std::uint32_t> canonical_generators(const FiniteModule& m, const Bits& n,
                                                const std::vector<Bits>& cyclic) {
  std::vector<std::uint32_t> gens;
  Bits cur(m.size());
  cur.set(0);
  const std::size_t target = n.count();
  std::size_t have = 1;
  n.for_each([&](std::size_t x) {
    if (have == target || cur.test(x)) return;
    const auto xi = static_cast<std::uint32_t>(x);
    gens.push_back(xi);
    cur = sum_of(m, cur, cyclic.empty() ? cyclic_of(m, xi) : cyclic[xi]);
    have = cur.count();
  });
  return gens;
}

}  // namespace modgraph::modules
