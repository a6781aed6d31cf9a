#include <algorithm>
#include <set>

#include "doctest.h"
#include "modgraph/errors.hpp"
#include "modgraph/instance.hpp"
#include "modgraph/zoo.hpp"

using namespace modgraph;
using nlohmann::json;

namespace {

bool has(const zoo::InstanceFamily& f, const std::string& name) {
  return std::any_of(f.begin(), f.end(), [&](const auto& d) { return d.name == name; });
}

}  // namespace

TEST_CASE("spec normalization and ids") {
  const auto a = spec::normalize(json::parse(R"({"version":1,"ring":{"kind":"zmod","n":12}})"));
  const auto b = spec::normalize(json::parse(R"({"ring":{"n":12,"kind":"zmod"},"module":{"kind":"regular"},"version":1})"));
  CHECK(spec::serialize(a) == spec::serialize(b));
  CHECK(spec::canonical_id(a) == spec::canonical_id(b));
  CHECK(spec::canonical_id(a).size() == 16);
  CHECK(spec::canonical_id(a) != spec::canonical_id(spec::normalize(spec::instance(spec::zmod(8)))));
  CHECK(spec::normalize(a) == a);
}

TEST_CASE("spec schema is strict") {
  auto bad = [](const char* text) { return spec::normalize(json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"version":2,"ring":{"kind":"zmod","n":4}})"), InvalidInput);
  CHECK_THROWS_AS(bad(R"({"version":1,"ring":{"kind":"zmod","n":4},"extra":1})"), InvalidInput);
  CHECK_THROWS_AS(bad(R"({"version":1,"ring":{"kind":"zmod","n":4,"p":2}})"), InvalidInput);
  CHECK_THROWS_AS(bad(R"({"version":1,"ring":{"kind":"octonion"}})"), InvalidInput);
  CHECK_THROWS_AS(bad(R"({"version":1,"ring":{"kind":"zmod","n":"4"}})"), InvalidInput);
  CHECK_THROWS_AS(bad(R"({"version":1})"), InvalidInput);
  CHECK_THROWS_AS(bad(R"({"version":1,"ring":{"kind":"product","factors":[{"kind":"zmod","n":2}]}})"), InvalidInput);
  CHECK_THROWS_AS(bad(R"({"version":1,"ring":{"kind":"zmod","n":4},"caps":{"max_colors":3}})"), InvalidInput);
  CHECK_THROWS_AS(spec::parse("{not json"), InvalidInput);
  CHECK_THROWS_AS(spec::load_file("/nonexistent/spec.json"), InvalidInput);
}

TEST_CASE("instances build with names and caps") {
  auto inst = spec::build(spec::instance(spec::zmod(12)));
  CHECK(inst.name == "Z/12/regular");
  CHECK(inst.id == spec::canonical_id(inst.spec));
  auto sum = spec::build(spec::instance(spec::gf(2, 1), spec::direct_sum(spec::regular(), spec::regular())));
  CHECK(sum.name == "F2/selfsum");
  CHECK(sum.module->size() == 4);

  auto capped = json::parse(R"({"version":1,"ring":{"kind":"zmod","n":12},"caps":{"max_ring_size":8}})");
  CHECK_THROWS_AS(spec::build(capped), CapExceeded);
  CHECK_NOTHROW(spec::build(capped, {}, {}, false));
  Caps base;
  CHECK(spec::effective_caps(spec::normalize(capped), base).max_ring_size == 8);

  auto table = json::parse(
      R"({"version":1,"ring":{"kind":"table","add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]},
          "module":{"kind":"custom","add":[[0,1],[1,0]],"act":[[0,0],[0,1]]}})");
  auto t = spec::build(table);
  CHECK(t.ring->size() == 2);
  CHECK(t.module->size() == 2);
  auto broken = table;
  broken["module"]["act"] = json::parse("[[0,1],[0,1]]");
  CHECK_THROWS_AS(spec::build(broken), InvalidInput);
  auto quotient = spec::build(spec::instance(spec::zmod(12), spec::quotient(spec::regular(), {6})));
  CHECK(quotient.module->size() == 6);
}

TEST_CASE("named instances") {
  const auto named = zoo::named_instances();
  CHECK(named.size() == 25);
  std::set<std::string> ids, names;
  for (const auto& d : named) {
    ids.insert(d.id);
    names.insert(d.name);
    CHECK(d.id == spec::canonical_id(d.spec));
  }
  CHECK(ids.size() == named.size());
  CHECK(names.count("triangular(F4,F2)/regular") == 1);
  CHECK(names.count("M2(F3)/regular") == 1);
  CHECK(names.count("Z/12/regular") == 1);
  auto tri = std::find_if(named.begin(), named.end(), [](const auto& d) { return d.name == "triangular(F9,F3)/regular"; });
  REQUIRE(tri != named.end());
  CHECK(tri->build().module->size() == 243);
}

TEST_CASE("families") {
  const auto all = zoo::family("all");
  for (auto n : {"Z/4/regular", "Z/8/regular", "Z/9/regular", "Z/12/regular", "Z/16/regular", "F4/regular",
                 "F8/regular", "F9/regular", "F16/regular", "M2(F2)/regular", "F2xF3/regular"})
    CHECK_MESSAGE(has(all, n), n);
  for (const auto& d : all) CHECK(d.build().ring->size() <= 16);
  std::set<std::string> ids;
  for (const auto& d : all) ids.insert(d.id);
  CHECK(ids.size() == all.size());

  const auto tf = zoo::family("triangle-free", {32, 64});
  CHECK(has(tf, "Z/8/regular"));
  CHECK_FALSE(has(tf, "Z/16/regular"));
  CHECK_FALSE(has(tf, "Z/12/regular"));

  CHECK(zoo::family("empty").empty());
  const auto reg = zoo::family("regular");
  for (const auto& d : reg) CHECK(d.spec["module"]["kind"] == "regular");

  const auto homo = zoo::family("socle-homogeneous-2");
  CHECK(has(homo, "M2(F2)/regular"));
  CHECK(has(homo, "F2/selfsum"));
  CHECK_FALSE(has(homo, "F2xF3/regular"));

  CHECK_THROWS_AS(zoo::family("prime"), InvalidInput);
  Caps small;
  small.max_ring_size = 8;
  CHECK_THROWS_AS(zoo::family("all", {16, 64}, small), CapExceeded);
}

TEST_CASE("family resolution is deterministic") {
  const auto a = zoo::resolve("family:all:16");
  const auto b = zoo::resolve("family:all:16");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.members[i].id == b.members[i].id);
  CHECK(zoo::resolve("named").size() == 25);
  CHECK(zoo::resolve("family:empty:16").empty());
  CHECK(zoo::resolve("family:all").size() == a.size());
  CHECK_THROWS_AS(zoo::resolve("family:all:x"), InvalidInput);
  CHECK_THROWS_AS(zoo::resolve("favourites"), InvalidInput);
}
