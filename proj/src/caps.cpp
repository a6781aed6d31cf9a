#include "modgraph/caps.hpp"

#include <charconv>
#include <string>

#include "modgraph/errors.hpp"

namespace modgraph {

void Caps::apply_overrides(std::string_view text) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("caps: expected key=value, got '" + std::string(item) + "'");
    const auto key = item.substr(0, eq);
    const auto val = item.substr(eq + 1);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size() || v == 0)
      throw InvalidInput("caps: bad value for '" + std::string(key) + "'");
    if (key == "max_ring_size")
      max_ring_size = v;
    else if (key == "max_module_size")
      max_module_size = v;
    else if (key == "max_submodules")
      max_submodules = v;
    else if (key == "max_exact_vertices")
      max_exact_vertices = v;
    else
      throw InvalidInput("caps: unknown key '" + std::string(key) + "'");
  }
}

}  // namespace modgraph
