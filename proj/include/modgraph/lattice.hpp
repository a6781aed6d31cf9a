#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "modgraph/module.hpp"

namespace modgraph::modules {

/// All submodules of a module, sorted canonically (size, then member list).
/// Index 0 is the zero submodule and the last index the whole module.
class Lattice {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const FiniteModule& module() const { return *module_; }
  const std::shared_ptr<const FiniteModule>& module_ptr() const { return module_; }

  std::size_t size() const { return subs_.size(); }
  const Submodule& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Submodule>& submodules() const { return subs_; }
  std::size_t zero() const { return 0; }
  std::size_t full() const { return subs_.size() - 1; }

  /// Index of the submodule with exactly these members, or npos.
  std::size_t find(const Bits& members) const;
  /// subs[a] is contained in subs[b].
  bool leq(std::size_t a, std::size_t b) const { return subs_[a].members.is_subset_of(subs_[b].members); }

  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  /// Simple submodules (atoms), ascending index.
  const std::vector<std::size_t>& simples() const { return atoms_; }
  const std::vector<Bits>& cyclic() const { return cyclic_; }

  bool is_simple(std::size_t i) const;
  bool is_maximal(std::size_t i) const;
  /// Meets every nonzero submodule of the ambient module nontrivially.
  bool is_essential(std::size_t i) const;
  /// Nonzero, and any two nonzero submodules of it meet nontrivially.
  bool is_uniform(std::size_t i) const;
  /// Length of the interval [lo, hi]: number of steps in a maximal chain.
  std::size_t interval_length(std::size_t lo, std::size_t hi) const;
  /// Submodules contained in subs[i] (including 0 and i).
  std::vector<std::size_t> below(std::size_t i) const;
  /// Submodules containing subs[i].
  std::vector<std::size_t> above(std::size_t i) const;

  friend Lattice enumerate_submodules(std::shared_ptr<const FiniteModule> m, const Caps& caps);

 private:
  std::shared_ptr<const FiniteModule> module_;
  std::vector<Submodule> subs_;
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
  std::vector<std::size_t> atoms_;
  std::vector<Bits> cyclic_;
};

/// Enumerates every submodule by closing the set of cyclic submodules under
/// joins. Throws CapExceeded past caps.max_submodules.
Lattice enumerate_submodules(std::shared_ptr<const FiniteModule> m, const Caps& caps = {});

}  // namespace modgraph::modules
