#include "modgraph/lattice.hpp"

#include <algorithm>
#include <deque>

#include "modgraph/errors.hpp"

namespace modgraph::modules {

std::size_t Lattice::find(const Bits& members) const {
  const auto it = index_.find(members);
  return it == index_.end() ? npos : it->second;
}

std::size_t Lattice::meet(std::size_t a, std::size_t b) const {
  const std::size_t i = find(subs_[a].members & subs_[b].members);
  if (i == npos) throw std::logic_error("lattice not closed under meet");
  return i;
}

std::size_t Lattice::join(std::size_t a, std::size_t b) const {
  const std::size_t i = find(sum_of(*module_, subs_[a].members, subs_[b].members));
  if (i == npos) throw std::logic_error("lattice not closed under join");
  return i;
}

bool Lattice::is_simple(std::size_t i) const { return std::binary_search(atoms_.begin(), atoms_.end(), i); }

bool Lattice::is_maximal(std::size_t i) const {
  if (i == full()) return false;
  for (std::size_t j = i + 1; j < full(); ++j)
    if (subs_[j].size() > subs_[i].size() && leq(i, j)) return false;
  return true;
}

bool Lattice::is_essential(std::size_t i) const {
  // Every nonzero submodule contains an atom, so it suffices to meet atoms.
  for (auto a : atoms_)
    if (!subs_[a].members.is_subset_of(subs_[i].members)) return false;
  return true;
}

bool Lattice::is_uniform(std::size_t i) const {
  if (i == zero()) return false;
  std::size_t inside = 0;
  for (auto a : atoms_)
    if (leq(a, i)) ++inside;
  return inside == 1;
}

std::size_t Lattice::interval_length(std::size_t lo, std::size_t hi) const {
  if (!leq(lo, hi)) throw InvalidInput("interval_length: bounds are not nested");
  std::size_t steps = 0, cur = lo;
  while (cur != hi) {
    // The smallest submodule strictly above cur inside hi covers cur.
    std::size_t next = npos;
    for (std::size_t j = cur + 1; j <= hi; ++j)
      if (subs_[j].size() > subs_[cur].size() && leq(cur, j) && leq(j, hi)) {
        next = j;
        break;
      }
    if (next == npos) throw std::logic_error("interval_length: no cover found");
    cur = next;
    ++steps;
  }
  return steps;
}

std::vector<std::size_t> Lattice::below(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= i; ++j)
    if (leq(j, i)) out.push_back(j);
  return out;
}

std::vector<std::size_t> Lattice::above(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = i; j < subs_.size(); ++j)
    if (leq(i, j)) out.push_back(j);
  return out;
}

Lattice enumerate_submodules(std::shared_ptr<const FiniteModule> m, const Caps& caps) {
  if (!m) throw InvalidInput("enumerate_submodules: null module");
  const FiniteModule& mod = *m;
  Lattice lat;
  lat.cyclic_ = cyclic_submodules(mod);

  std::unordered_map<Bits, bool, BitsHash> seen;
  std::vector<Bits> distinct_cyclic;
  for (const auto& c : lat.cyclic_)
    if (seen.emplace(c, true).second) distinct_cyclic.push_back(c);
  if (seen.size() > caps.max_submodules)
    throw CapExceeded("submodule count exceeds max submodules " + std::to_string(caps.max_submodules));

  std::vector<Bits> found = distinct_cyclic;
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < found.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    const Bits cur = found[work.front()];
    work.pop_front();
    for (const auto& c : distinct_cyclic) {
      if (c.is_subset_of(cur)) continue;
      Bits next = sum_of(mod, cur, c);
      if (seen.emplace(next, true).second) {
        if (seen.size() > caps.max_submodules)
          throw CapExceeded("submodule count exceeds max submodules " + std::to_string(caps.max_submodules));
        found.push_back(std::move(next));
        work.push_back(found.size() - 1);
      }
    }
  }

  lat.subs_.reserve(found.size());
  for (auto& b : found) lat.subs_.push_back(Submodule{std::move(b), {}});
  std::sort(lat.subs_.begin(), lat.subs_.end(), canonical_less);
  for (std::size_t i = 0; i < lat.subs_.size(); ++i) {
    auto& s = lat.subs_[i];
    s.generators = canonical_generators(mod, s.members, lat.cyclic_);
    lat.index_.emplace(s.members, i);
  }
  // Atoms: nonzero submodules generated by each of their nonzero elements.
  for (std::size_t i = 1; i < lat.subs_.size(); ++i) {
    const auto& s = lat.subs_[i];
    const std::size_t sz = s.size();
    bool simple = true;
    s.members.for_each([&](std::size_t x) {
      if (x != 0 && lat.cyclic_[x].count() != sz) simple = false;
    });
    if (simple) lat.atoms_.push_back(i);
  }
  lat.module_ = std::move(m);
  return lat;
}

}  // namespace modgraph::modules
