#include <filesystem>
#include <sstream>

#include "crystals/cli.hpp"
#include "crystals/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace crystals;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::path(CRYSTALS_TEST_TMPDIR) / name).string();
}

}  // namespace

TEST_CASE("build, tensor, decompose") {
  REQUIRE(run({"build", "--type", "A2", "--hw", "1,0", "--out", tmp("cli_v.json")}).code == 0);
  REQUIRE(run({"build", "--cartan", "[[2,-1],[-1,2]]", "--hw", "0,1", "--out",
               tmp("cli_w.json")})
              .code == 0);
  CHECK(load_crystal(tmp("cli_v.json")).size() == 3);
  REQUIRE(run({"tensor", tmp("cli_v.json"), tmp("cli_w.json"), "--out", tmp("cli_vw.json")})
              .code == 0);

  const Run d = run({"decompose", tmp("cli_vw.json")});
  REQUIRE(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["hw"] == nlohmann::json::parse("[1,1]"));
  CHECK(j["entries"][1]["hw"] == nlohmann::json::parse("[0,0]"));

  const Run t = run({"decompose", tmp("cli_vw.json"), "--report", "table"});
  CHECK(t.code == 0);
  CHECK(t.out.find("(1,1)") != std::string::npos);

  CHECK(run({"verify", tmp("cli_vw.json")}).code == 0);
  CHECK(run({"branch", tmp("cli_vw.json"), "--levi", "1"}).code == 0);
  CHECK(run({"strings", tmp("cli_vw.json"), "--color", "2"}).code == 0);
  CHECK(run({"strings", tmp("cli_vw.json"), "--color", "3"}).code == 2);
  CHECK(run({"dot", tmp("cli_vw.json")}).out.find("digraph") != std::string::npos);
}

TEST_CASE("lr and closed-check") {
  const Run r = run({"lr", "--type", "A2", "--hw1", "1,1", "--hw2", "1,1", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("B(1,1) x 2") != std::string::npos);
  const Run c = run({"closed-check", "--type", "A3", "--hw1", "1,0,1", "--hw2", "0,1,0"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["closed"] == true);
}

TEST_CASE("pgl2 subcommands") {
  const Run census = run({"pgl2", "census", "--lmax", "3", "--prec", "24"});
  REQUIRE(census.code == 0);
  CHECK(nlohmann::json::parse(census.out)["matches_criterion"] == true);

  const Run conv = run({"pgl2", "convolve", "--l1", "1", "--m1", "1", "--l2", "2", "--m2", "0",
                        "--samples", "10"});
  REQUIRE(conv.code == 0);
  const auto cj = nlohmann::json::parse(conv.out);
  CHECK(cj["generic"] == 1);
  CHECK(cj["generic"] == cj["max_l2_minus_m1_l1_plus_m2"]);

  const Run params = run({"pgl2", "params", "--l", "3", "--m", "1"});
  REQUIRE(params.code == 0);
  CHECK(nlohmann::json::parse(params.out)["count"] == 2);

  const Run crystal = run({"pgl2", "crystal", "--l", "2"});
  REQUIRE(crystal.code == 0);
  CHECK(parse_crystal(crystal.out).size() == 3);
}

TEST_CASE("errors and exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"build", "--type", "A2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run bad = run({"build", "--type", "A2", "--hw", "1,-1"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"build", "--type", "Q7", "--hw", "1"}).code == 1);
  CHECK(run({"verify", tmp("missing.json")}).code == 2);
  CHECK(run({"pgl2", "params", "--l", "2", "--m", "1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
