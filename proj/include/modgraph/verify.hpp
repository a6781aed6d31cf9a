#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modgraph/graph.hpp"
#include "modgraph/instance.hpp"
#include "modgraph/solver.hpp"
#include "modgraph/zoo.hpp"

namespace modgraph::verify {

enum class Status { Pass, Fail, Vacuous, ApplicabilityFailed, Skipped };
std::string to_string(Status s);

struct CheckReport {
  std::string check;
  std::string instance;
  std::string instance_id;
  Status status = Status::Pass;
  nlohmann::json witness = nullptr;             // set on FAIL and APPLICABILITY-FAILED
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<std::string> notes;
  double millis = 0;

  nlohmann::json to_json(bool with_timing = true) const;
};

/// Per-instance cache: lattice, graph, complement and the exact invariants,
/// computed on first use. Exact invariants throw CapExceeded past the cap.
class Analysis {
 public:
  explicit Analysis(spec::Instance inst);

  const spec::Instance& instance() const { return inst_; }
  const Caps& caps() const { return inst_.caps; }
  const modules::FiniteModule& module() const { return *inst_.module; }
  const modules::Lattice& lattice() const { return *lattice_; }
  const graph::IntersectionGraph& graph() const { return graph_; }
  const graph::Graph& complement() const { return complement_; }
  std::size_t order() const { return graph_.order(); }

  std::size_t socle();
  std::size_t length();
  const graph::Clique& omega();
  const graph::Coloring& chi();
  const graph::Clique& omega_c();
  const graph::Coloring& chi_c();

 private:
  spec::Instance inst_;
  std::shared_ptr<const modules::Lattice> lattice_;
  graph::IntersectionGraph graph_;
  graph::Graph complement_;
  std::optional<std::size_t> socle_, length_;
  std::optional<graph::Clique> omega_, omega_c_;
  std::optional<graph::Coloring> chi_, chi_c_;
};

using CheckFn = CheckReport (*)(Analysis&);

struct CheckInfo {
  std::string id;
  std::string title;
  CheckFn fn;
};

CheckReport check_C1_iso_counts(Analysis& a);
CheckReport check_C2_low_degree(Analysis& a);
CheckReport check_C3_length_additivity(Analysis& a);
CheckReport check_C4_maximal_low_degree(Analysis& a);
CheckReport check_C5_matrix_triangular_shapes(Analysis& a);
CheckReport check_C6_socle_cliques(Analysis& a);
CheckReport check_C7_overline_coloring(Analysis& a);
CheckReport check_C8_complement_coloring(Analysis& a);
CheckReport check_C9_triangle_free(Analysis& a);
CheckReport check_C10_connectivity(Analysis& a);
CheckReport check_C11_structural_predicates(Analysis& a);

const std::vector<CheckInfo>& all_checks();

/// "all", or a comma-separated list of full ids or their short prefixes
/// ("C4", "C4-maximal-low-degree"). Throws InvalidInput on unknown ids.
std::vector<CheckInfo> resolve_checks(const std::string& list);

/// Runs one check with timing; CapExceeded becomes SKIPPED.
CheckReport run_check(const CheckInfo& check, Analysis& a);

struct Summary {
  // check id -> status name -> count
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::vector<std::string> warnings;
  std::size_t failures = 0;

  nlohmann::json to_json() const;
  std::string table() const;
};

struct SuiteResult {
  std::vector<CheckReport> reports;  // ordered by (instance id, check id)
  Summary summary;
};

/// Runs every check over every member of the family. Instances that cannot be
/// built or analysed within caps produce SKIPPED entries.
SuiteResult run_suite(const zoo::InstanceFamily& family, const std::vector<CheckInfo>& checks, const Caps& caps = {});

}  // namespace modgraph::verify
