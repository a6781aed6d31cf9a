#include "doctest.h"
#include "modgraph/errors.hpp"
#include "modgraph/verify.hpp"
#include "modgraph/zoo.hpp"
#include "support.hpp"

using namespace modgraph;
using namespace modgraph::verify;
using nlohmann::json;

namespace {

CheckReport run(const std::string& id, const json& spec) {
  Analysis a(support::build(spec));
  return run_check(resolve_checks(id).at(0), a);
}

json selfsum(const json& ring) { return spec::instance(ring, spec::direct_sum(spec::regular(), spec::regular())); }

const json z2z4 = spec::instance(spec::zmod(4), spec::direct_sum(spec::quotient(spec::regular(), {2}), spec::regular()));
const json z6 = spec::instance(spec::zmod(6), spec::direct_sum(spec::quotient(spec::regular(), {2}), spec::quotient(spec::regular(), {3})));

}  // namespace

TEST_CASE("check ids resolve") {
  CHECK(all_checks().size() == 11);
  CHECK(resolve_checks("all").size() == 11);
  CHECK(resolve_checks("C4").at(0).id == "C4-maximal-low-degree");
  CHECK(resolve_checks("C1,C10").size() == 2);
  CHECK(resolve_checks("C10-connectivity").at(0).id == "C10-connectivity");
  CHECK_THROWS_AS(resolve_checks("C12"), InvalidInput);
}

TEST_CASE("C1 counts vertices of a sum of two simples") {
  auto f3 = run("C1", selfsum(spec::gf(3, 1)));
  CHECK(f3.status == Status::Pass);
  CHECK(f3.metadata["alpha"] == 4);
  auto mixed = run("C1", z6);
  CHECK(mixed.status == Status::Pass);
  CHECK(mixed.metadata["alpha"] == 2);
  CHECK(run("C1", selfsum(spec::gf(2, 1))).metadata["alpha"] == 3);
  CHECK(run("C1", spec::instance(spec::zmod(8))).status == Status::Vacuous);
}

TEST_CASE("C2 low degree vertices") {
  CHECK(run("C2", spec::instance(spec::zmod(8))).status == Status::Pass);
  CHECK(run("C2", spec::instance(spec::poly_quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"}))).status == Status::Pass);
  CHECK(run("C2", spec::instance(spec::matrix(2, 1, 2))).status == Status::Pass);
  auto z12 = run("C2", spec::instance(spec::zmod(12)));
  CHECK(z12.status == Status::Fail);
  CHECK_FALSE(z12.witness.is_null());
  CHECK(z12.witness.dump().find("chain of length 2") != std::string::npos);
}

TEST_CASE("C3 length additivity") {
  for (int n : {8, 12, 36}) CHECK(run("C3", spec::instance(spec::zmod(n))).status == Status::Pass);
  CHECK(run("C3", selfsum(spec::gf(2, 1))).status == Status::Pass);
}

TEST_CASE("C4 maximal submodules of low degree") {
  CHECK(run("C4", spec::instance(spec::triangular(2, 2, 1))).status == Status::Pass);
  CHECK(run("C4", spec::instance(spec::matrix(2, 1, 2))).status == Status::Pass);
  CHECK(run("C4", z2z4).status == Status::Vacuous);
  CHECK(run("C4", spec::instance(spec::product(spec::gf(2, 1), spec::gf(2, 1)))).status == Status::Fail);
}

TEST_CASE("C5 matrix and triangular shapes") {
  auto m3 = run("C5", spec::instance(spec::matrix(3, 1, 2)));
  CHECK(m3.status == Status::Pass);
  auto t4 = run("C5", spec::instance(spec::triangular(2, 2, 1)));
  CHECK(t4.status == Status::Pass);
  CHECK(t4.metadata["alpha"] == 7);
  auto t9 = run("C5", spec::instance(spec::triangular(3, 2, 1)));
  CHECK(t9.status == Status::Pass);
  CHECK(t9.metadata["alpha"] == 12);
  CHECK(run("C5", spec::instance(spec::zmod(12))).status == Status::Vacuous);
}

TEST_CASE("C6 socle cliques") {
  CHECK(run("C6", spec::instance(spec::triangular(2, 2, 1))).status == Status::Pass);
  CHECK(run("C6", selfsum(spec::gf(2, 1))).status == Status::Pass);
  CHECK(run("C6", spec::instance(spec::zmod(12))).status == Status::Vacuous);
}

TEST_CASE("C7 overline coloring") {
  CHECK(run("C7", spec::instance(spec::triangular(2, 2, 1))).status == Status::Pass);
  CHECK(run("C7", selfsum(spec::gf(3, 1))).status == Status::Pass);
  const auto r = run("C7", z2z4);
  CHECK((r.status == Status::Pass || r.status == Status::ApplicabilityFailed));
}

TEST_CASE("C8 complement coloring") {
  auto f2 = run("C8", selfsum(spec::gf(2, 1)));
  CHECK(f2.status != Status::Fail);
  CHECK(f2.metadata["omega_c"] == 3);
  CHECK(f2.metadata["chi_c"] == 3);
  auto tri = run("C8", spec::instance(spec::triangular(2, 2, 1)));
  CHECK(tri.status == Status::ApplicabilityFailed);
  CHECK(tri.metadata["omega"] == 3);
  CHECK(tri.metadata["omega_c"] == 5);
  CHECK(tri.metadata["chi_c"] == 5);
  CHECK(run("C8", spec::instance(spec::zmod(8))).status == Status::Vacuous);
}

TEST_CASE("C9 triangle-free structure") {
  CHECK(run("C9", spec::instance(spec::zmod(8))).status == Status::Pass);
  CHECK(run("C9", spec::instance(spec::poly_quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"}))).status == Status::Pass);
  auto z12 = run("C9", spec::instance(spec::zmod(12)));
  CHECK(z12.status == Status::Pass);
  CHECK(z12.metadata["triangle_free"] == false);
}

TEST_CASE("C10 connectivity") {
  CHECK(run("C10", z6).status == Status::Pass);
  CHECK(run("C10", spec::instance(spec::zmod(12))).status == Status::Pass);
  CHECK(run("C10", spec::instance(spec::zmod(27))).status == Status::Pass);
  CHECK(run("C10", spec::instance(spec::gf(2, 1))).status == Status::Vacuous);
}

TEST_CASE("C11 is report-only") {
  for (const auto& s : {spec::instance(spec::triangular(2, 2, 1)), spec::instance(spec::zmod(8)), selfsum(spec::gf(2, 1))})
    CHECK(run("C11", s).status == Status::Pass);
  CHECK(run("C11", spec::instance(spec::zmod(8))).metadata["double_simple_image"].is_null());
  CHECK_FALSE(run("C11", selfsum(spec::gf(2, 1))).metadata["double_simple_image"].is_null());
}

TEST_CASE("suite over the family up to 16 has connectivity right") {
  auto res = run_suite(zoo::family("all"), resolve_checks("C10"));
  CHECK(res.summary.failures == 0);
  CHECK_FALSE(res.reports.empty());
}

TEST_CASE("empty suite") {
  auto res = run_suite(zoo::family("empty"), resolve_checks("all"));
  CHECK(res.reports.empty());
  CHECK(res.summary.failures == 0);
}

TEST_CASE("suite warns about checks vacuous everywhere") {
  zoo::InstanceFamily fam{"chains", {zoo::make_def("Z/8", spec::instance(spec::zmod(8))), zoo::make_def("Z/27", spec::instance(spec::zmod(27)))}};
  auto res = run_suite(fam, resolve_checks("C5,C10"));
  REQUIRE(res.summary.warnings.size() == 1);
  CHECK(res.summary.warnings[0].find("C5") != std::string::npos);
}

TEST_CASE("suite skips instances beyond caps") {
  zoo::InstanceFamily fam{"big", {zoo::make_def("Z/36", spec::instance(spec::zmod(36)))}};
  Caps caps;
  caps.max_ring_size = 16;
  auto res = run_suite(fam, resolve_checks("C1,C2"), caps);
  REQUIRE(res.reports.size() == 2);
  for (const auto& r : res.reports) CHECK(r.status == Status::Skipped);
}

TEST_CASE("reports are ordered and replayable") {
  const auto fam = zoo::resolve("named");
  auto first = run_suite(fam, resolve_checks("all"));
  auto second = run_suite(fam, resolve_checks("all"));
  REQUIRE(first.reports.size() == second.reports.size());
  for (std::size_t i = 0; i < first.reports.size(); ++i) {
    CHECK(first.reports[i].to_json(false) == second.reports[i].to_json(false));
    if (i) {
      const auto& a = first.reports[i - 1];
      const auto& b = first.reports[i];
      CHECK(a.instance_id <= b.instance_id);
    }
  }
  for (const auto& r : first.reports) {
    if (r.status != Status::Fail) continue;
    CHECK_FALSE(r.witness.is_null());
    for (const auto& def : fam)
      if (def.id == r.instance_id) {
        Analysis a(def.build());
        CHECK(run_check(resolve_checks(r.check).at(0), a).to_json(false) == r.to_json(false));
      }
  }
  std::size_t c4_active = 0;
  for (const auto& r : first.reports)
    if (r.check == "C4-maximal-low-degree" && r.status != Status::Vacuous && r.instance.rfind("triangular", 0) == 0)
      ++c4_active;
  CHECK(c4_active == 3);
}
