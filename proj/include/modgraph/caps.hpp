#pragma once

#include <cstddef>
#include <string_view>

namespace modgraph {

/// Size limits shared by every construction and solver.
struct Caps {
  std::size_t max_ring_size = 1024;
  std::size_t max_module_size = 1024;
  std::size_t max_submodules = 20000;
  std::size_t max_exact_vertices = 64;
  // Axioms are checked exhaustively up to this carrier size, sampled above.
  std::size_t exhaustive_axiom_limit = 256;
  std::size_t sampled_axiom_checks = 20000;

  /// Overrides fields from a "key=value,key=value" string, e.g. the value of
  /// MODGRAPH_CAPS. Unknown keys or malformed numbers throw InvalidInput.
  void apply_overrides(std::string_view text);
};

}  // namespace modgraph
