#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modgraph/bits.hpp"
#include "modgraph/caps.hpp"
#include "modgraph/ring.hpp"

namespace modgraph::modules {

using algebra::FiniteRing;

/// A finite unitary left module over a FiniteRing, held as an addition table
/// and an action table act(r, x). Element 0 is the zero.
class FiniteModule {
 public:
  std::uint32_t size() const { return m_; }
  const FiniteRing& ring() const { return *ring_; }
  const std::shared_ptr<const FiniteRing>& ring_ptr() const { return ring_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_[std::size_t{x} * m_ + y]; }
  std::uint32_t act(std::uint32_t r, std::uint32_t x) const { return act_[std::size_t{r} * m_ + x]; }
  std::uint32_t neg(std::uint32_t x) const { return neg_[x]; }

  std::string label(std::uint32_t x) const;
  const std::string& name() const { return name_; }

  /// Verifies the abelian-group and module axioms (exhaustive up to
  /// caps.exhaustive_axiom_limit, sampled above); throws InvalidInput.
  static FiniteModule from_tables(std::shared_ptr<const FiniteRing> ring, std::uint32_t m,
                                  std::vector<std::uint32_t> add, std::vector<std::uint32_t> act, std::string name,
                                  std::vector<std::string> labels = {}, const Caps& caps = {});

 private:
  std::shared_ptr<const FiniteRing> ring_;
  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> add_, act_, neg_;
  std::string name_;
  std::vector<std::string> labels_;
};

void verify_module_axioms(const FiniteModule& m, const Caps& caps = {});

/// A submodule as a member bitset over the ambient carrier plus a canonical
/// generator list (greedy over ascending members).
struct Submodule {
  Bits members;
  std::vector<std::uint32_t> generators;

  std::size_t size() const { return members.count(); }
  bool contains(std::uint32_t x) const { return members.test(x); }
  bool is_zero() const { return members.count() == 1; }
};

/// Canonical order: by size, then by ascending member list.
bool canonical_less(const Submodule& a, const Submodule& b);

FiniteModule regular_module(std::shared_ptr<const FiniteRing> ring, const Caps& caps = {});
/// Direct sum over a common ring; element (x, y) has index x * |b| + y.
FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b, const Caps& caps = {});

struct QuotientModule {
  FiniteModule module;
  /// projection[x] = index of the coset of x.
  std::vector<std::uint32_t> projection;
  /// representative[c] = minimal element of coset c.
  std::vector<std::uint32_t> representative;
};

/// M/N with minimal-index coset representatives, numbered by ascending
/// representative. Throws InvalidInput when n is not a submodule.
QuotientModule quotient(const FiniteModule& m, const Bits& n, const Caps& caps = {});

/// Restriction of M to the carrier of a submodule, renumbered ascending.
struct RestrictedModule {
  FiniteModule module;
  std::vector<std::uint32_t> to_ambient;
};
RestrictedModule restrict_to(const FiniteModule& m, const Bits& n, const Caps& caps = {});

/// Rx for every x (cyclic submodules).
std::vector<Bits> cyclic_submodules(const FiniteModule& m);

/// Smallest submodule containing gens.
Submodule submodule_generated(const FiniteModule& m, const std::vector<std::uint32_t>& gens);

/// a + b for submodules a, b of m.
Bits sum_of(const FiniteModule& m, const Bits& a, const Bits& b);

/// True when n (a bitset) is closed under addition and the ring action and
/// contains 0.
bool is_submodule(const FiniteModule& m, const Bits& n);

/// Greedy canonical generators of a submodule given its member set.
std::vector<std::uint32_t> canonical_generators(const FiniteModule& m, const Bits& n, const std::vector<Bits>& cyclic);

}  // namespace modgraph::modules
