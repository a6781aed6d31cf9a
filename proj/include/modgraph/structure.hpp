#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modgraph/lattice.hpp"

namespace modgraph::modules {

/// Join of all simple submodules, as a lattice index.
std::size_t socle(const Lattice& lat);

struct UBasis {
  std::vector<std::size_t> members;  // lattice indices of the uniform summands
};

/// Greedy u-basis: uniform submodules in canonical order, kept while the sum
/// stays direct. Its size is the Goldie dimension.
UBasis u_basis(const Lattice& lat);
std::size_t goldie_dimension(const Lattice& lat);
std::size_t composition_length(const Lattice& lat);

/// True when the sum of the given submodules of m is direct.
bool is_direct_sum(const FiniteModule& m, const std::vector<Bits>& family);

/// True when the module has no submodules besides 0 and itself.
bool is_simple_module(const FiniteModule& m);

/// Number of homomorphisms from the simple submodule s of a to the submodule
/// t of b (same ring). Uses Hom(Rs, T) = {t : ann(s) t = 0} for any s != 0.
std::uint64_t hom_count_from_simple(const FiniteModule& a, const Bits& s, const FiniteModule& b, const Bits& t);

/// |Iso(s, t)| for simple submodules s of a and t of b.
std::uint64_t iso_count(const FiniteModule& a, const Bits& s, const FiniteModule& b, const Bits& t);

/// |Iso(S, T)| for simple modules; throws InvalidInput on non-simple input.
std::uint64_t count_iso_simple(const FiniteModule& s, const FiniteModule& t);
/// |End(S)| for a simple module S.
std::uint64_t end_size(const FiniteModule& s);

/// A quotient M/K containing a direct sum of two isomorphic simple modules,
/// described by lattice indices: kernel K and the preimages X, Y of the two
/// simples (K < X, K < Y, X meet Y = K).
struct DoubleSimpleWitness {
  std::size_t kernel;
  std::size_t first;
  std::size_t second;
};

/// First witness over kernels in canonical order, or nullopt.
std::optional<DoubleSimpleWitness> find_double_simple_image(const Lattice& lat);
/// Witness search restricted to one kernel.
std::optional<DoubleSimpleWitness> double_simple_image_at(const Lattice& lat, std::size_t kernel);

/// Covers of subs[i]: submodules X with subs[i] < X and X / subs[i] simple.
std::vector<std::size_t> covers(const Lattice& lat, std::size_t i);

/// Number of homomorphisms X/K -> Y/K where X/K is simple (all inside one
/// module, K below X and Y).
std::uint64_t hom_count_between_subquotients(const Lattice& lat, std::size_t kernel, std::size_t x, std::size_t y);

/// Prime radical of a finite ring: the intersection of its maximal left
/// ideals, returned as a member set in the regular module. Verifies that it
/// is a nilpotent two-sided ideal annihilating every minimal left ideal.
struct PrimeRadical {
  Lattice lattice;  // of the regular module
  std::size_t index;
  std::size_t nilpotency_index;  // least k with radical^k = 0
};
PrimeRadical prime_radical(std::shared_ptr<const algebra::FiniteRing> ring, const Caps& caps = {});

/// Additive span of {a b : a in A, b in B} in the ring.
Bits product_span(const algebra::FiniteRing& r, const Bits& a, const Bits& b);

}  // namespace modgraph::modules
