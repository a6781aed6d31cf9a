#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "modgraph/caps.hpp"
#include "modgraph/instance.hpp"
#include "modgraph/verify.hpp"
#include "modgraph/zoo.hpp"

namespace modgraph::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kCapExceeded = 3 };

/// format "text" or "json".
std::string cmd_lattice(const spec::Instance& inst, const std::string& format = "text");
/// format "dot" or "json".
std::string cmd_graph(const spec::Instance& inst, const std::string& format = "dot");
/// {order, degrees, omega, chi, omega_c, chi_c, girth, diameter, connected,
///  shape, socle, goldie, length}; girth and diameter are null for infinity.
nlohmann::json invariants(const spec::Instance& inst);
std::string cmd_invariants(const spec::Instance& inst);

struct VerifyOutput {
  std::string records;  // one JSON object per line
  std::string table;
  bool failed = false;
  verify::SuiteResult result;
};
VerifyOutput cmd_verify(const zoo::InstanceFamily& family, const std::string& checks, const Caps& caps,
                        bool with_timing = true);

/// format "text" or "json".
std::string cmd_zoo(const zoo::InstanceFamily& family, const std::string& format = "text");

/// Defaults, then MODGRAPH_CAPS from the environment.
Caps caps_from_environment();

/// Builds an instance with caps = base, spec caps, then explicit overrides.
spec::Instance load_instance(const nlohmann::json& spec, const Caps& base, const std::string& flag_overrides);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modgraph::cli
