#include <filesystem>
#include <fstream>

#include "crystals/builders.hpp"
#include "crystals/errors.hpp"
#include "crystals/io.hpp"
#include "doctest.h"

using namespace crystals;
using nlohmann::json;

namespace {

json sl2_one() {
  return json::parse(R"({"format":"crystal/1","cartan":[[2]],
    "elements":[{"id":0,"wt":[1]},{"id":1,"wt":[-1]}],
    "f":{"1":[[0,1]]}})");
}

}  // namespace

TEST_CASE("crystal/1 layout") {
  const auto j = crystal_to_json(sl2_crystal(1));
  CHECK(j.dump() ==
        R"({"format":"crystal/1","cartan":[[2]],"elements":[{"id":0,"wt":[1]},{"id":1,"wt":[-1]}],"f":{"1":[[0,1]]}})");
  const auto k = crystal_to_json(Crystal::singleton(RootDatum::from_type("A2"), Weight{0, 0}));
  CHECK(k["f"]["1"].empty());
  CHECK(k["f"]["2"].empty());
}

TEST_CASE("round trip") {
  const SeedTable seeds(RootDatum::from_type("A3"));
  for (const Weight& w : {Weight{1, 0, 0}, Weight{1, 1, 0}, Weight{0, 2, 1}}) {
    const Crystal b = build_B(seeds, w);
    const std::string text = serialize_crystal(b);
    const Crystal back = parse_crystal(text);
    CHECK(back == b);
    CHECK(serialize_crystal(back) == text);
  }
  const Crystal g2 = Crystal::singleton(RootDatum::from_type("G2"), Weight{0, 0});
  CHECK(parse_crystal(serialize_crystal(g2)) == g2);
}

TEST_CASE("files") {
  const std::filesystem::path dir = CRYSTALS_TEST_TMPDIR;
  const auto path = dir / "io_round_trip.json";
  const Crystal b = sl2_crystal(5);
  save_crystal(b, path);
  CHECK(load_crystal(path) == b);
  CHECK_THROWS_AS(load_crystal(dir / "does_not_exist.json"), Error);
}

TEST_CASE("schema errors") {
  SUBCASE("dangling edge") {
    json j = sl2_one();
    j["f"]["1"] = json::parse("[[0,7]]");
    CHECK_THROWS_AS(crystal_from_json(j), SchemaError);
  }
  SUBCASE("unknown format") {
    json j = sl2_one();
    j["format"] = "crystal/2";
    CHECK_THROWS_AS(crystal_from_json(j), SchemaError);
  }
  SUBCASE("ids not dense") {
    json j = sl2_one();
    j["elements"][1]["id"] = 5;
    CHECK_THROWS_AS(crystal_from_json(j), SchemaError);
  }
  SUBCASE("weight of wrong length") {
    json j = sl2_one();
    j["elements"][0]["wt"] = json::parse("[1,0]");
    CHECK_THROWS_AS(crystal_from_json(j), SchemaError);
  }
  SUBCASE("color out of range") {
    json j = sl2_one();
    j["f"]["2"] = json::array();
    CHECK_THROWS_AS(crystal_from_json(j), SchemaError);
  }
  SUBCASE("duplicate f edge") {
    json j = sl2_one();
    j["f"]["1"] = json::parse("[[0,1],[0,1]]");
    CHECK_THROWS_AS(crystal_from_json(j), SchemaError);
  }
  SUBCASE("not json") { CHECK_THROWS_AS(parse_crystal("{oops"), SchemaError); }
  SUBCASE("invalid cartan") {
    json j = sl2_one();
    j["cartan"] = json::parse("[[3]]");
    CHECK_THROWS_AS(crystal_from_json(j), Error);
  }
}

TEST_CASE("axiom violations are rejected") {
  json j = sl2_one();
  j["elements"][1]["wt"] = json::parse("[1]");
  CHECK_THROWS_AS(crystal_from_json(j), AxiomError);
}

TEST_CASE("seed directory") {
  const std::filesystem::path dir = std::filesystem::path(CRYSTALS_TEST_TMPDIR) / "seeds_b2";
  std::filesystem::create_directories(dir);
  // cartan[0][1] = -2: node 1 is short, so B(omega_1) is the 4-element
  // spin crystal and B(omega_2) the 5-element vector crystal.
  const RootDatum d({{2, -2}, {-1, 2}});
  const Crystal spin(d, {Weight{1, 0}, Weight{-1, 1}, Weight{1, -1}, Weight{-1, 0}},
                     {{1, kNone, 3, kNone}, {kNone, 2, kNone, kNone}});
  const Crystal vec(d, {Weight{0, 1}, Weight{2, -1}, Weight{0, 0}, Weight{-2, 1}, Weight{0, -1}},
                    {{kNone, 2, 3, kNone, kNone}, {1, kNone, kNone, 4, kNone}});
  REQUIRE(verify_axioms(spin).ok());
  REQUIRE(verify_axioms(vec).ok());
  save_crystal(spin, dir / "b_spin.json");
  save_crystal(vec, dir / "a_vector.json");
  SeedTable seeds(d);
  load_seed_directory(seeds, dir);
  CHECK(seeds.has(0));
  CHECK(seeds.has(1));
  const Crystal b = build_B(seeds, Weight{1, 1});
  CHECK(static_cast<long long>(b.size()) == d.weyl_dimension(Weight{1, 1}));
  CHECK(verify_axioms(b).ok());
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(sl2_crystal(1));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1") != std::string::npos);
}

TEST_CASE("datum_from_json") {
  CHECK(datum_from_json(json::parse("[[2,-1],[-1,2]]")).rank() == 2);
  CHECK_THROWS(datum_from_json(json::parse("[[2,-1],[-1]]")));
  CHECK_THROWS(datum_from_json(json::parse("\"A2\"")));
}
