#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coorbit/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = coorbit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json out_json(const RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("orbit subcommand") {
  SUBCASE("two corner coefficients") {
    RunResult r = run({"orbit", "gl_upper:4", "psi_ab(1,1)"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j.at("case_name") == "orbit");
    CHECK(j.at("results").at("orbit_dimension") == 4);
    CHECK(j.at("results").at("depth") == 3);
    CHECK(j.at("results").at("classification") == "HighDepth");
    CHECK(j.at("results").at("n_stabilizer_dim") == 2);
  }
  SUBCASE("heisenberg center") {
    RunResult r = run({"orbit", "heis:1", R"({"z":"1"})"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j.at("results").at("orbit_dimension") == 2);
    CHECK(j.at("results").at("depth") == 2);
    CHECK(j.at("results").at("classification") == "WeilPullback");
  }
  SUBCASE("zero functional") {
    RunResult r = run({"orbit", "gl_upper:4", "{}"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j.at("results").at("orbit_dimension") == 0);
    CHECK(j.at("results").at("depth") == 0);
    CHECK(j.at("results").at("classification") == "TrivialFunctionalOrbit");
  }
  SUBCASE("corner shorthand") {
    RunResult r = run({"orbit", "gl_upper:5", "f(1)"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j.at("results").at("orbit_dimension") == 6);  // 2n-4 at n=5
    CHECK(j.at("results").at("depth") == 4);
    CHECK(j.at("inputs").at("psi") == "f(1)");
  }
}

TEST_CASE("classify subcommand") {
  RunResult r = run({"classify", "gl_upper:4", R"({"e_1,3":"1"})"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j.at("results").at("classification") == "WeilPullback");
  CHECK(j.at("results").at("symplectic_space_dim") == 2);
  CHECK(j.at("results").at("heisenberg").at("central_coefficient") == "1");
  CHECK(j.at("results").at("metaplectic").at("bound") == "ExactlyOne");
  CHECK(j.at("results").at("metaplectic").at("reason") == "FlagStable");
}

TEST_CASE("polarize subcommand") {
  RunResult r = run({"polarize", "heis:2", R"({"z":"1"})"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j.at("results").at("dim") == 3);
  CHECK(j.at("results").at("is_polarization") == true);
  auto coords = j.at("results").at("polarization").at("subspace").at("coords");
  CHECK(std::find(coords.begin(), coords.end(), json(4)) != coords.end());  // z has index 4
}

TEST_CASE("stabilizer subcommand") {
  RunResult r = run({"stabilizer", "gl_upper:4", "psi_ab(1,1)"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j.at("results").at("levi_stabilizer_dim") == 2);
  CHECK(j.at("results").at("orbit_dimension") == 4);
  CHECK(j.at("results").at("p_orbit_dimension") == 6);
}

TEST_CASE("degenerate subcommand") {
  RunResult r = run({"degenerate", "gl_upper:4", R"(psi={"e_1,4":"1","e_2,3":"1"})",
                     R"(psi0={"e_1,4":"1"})", "lambda=0,0,1,0"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j.at("results").at("horizontal") == true);
  CHECK(j.at("results").at("simple") == true);
  CHECK(j.at("results").at("stabilizer_monotonicity") == true);
  CHECK(j.at("results").at("certificate").at("simple_checks").at("delta_root_label") == "e_2,3");
}

TEST_CASE("cosets subcommand") {
  RunResult r = run({"cosets", "6"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j.at("results").at("outer_count") == 4);
  CHECK(j.at("results").at("inner_count") == 3);
  CHECK(j.at("results").at("outer").size() == 4);
  // n = 4 has no inner listing.
  json j4 = out_json(run({"cosets", "4"}));
  CHECK(j4.at("results").at("outer_count") == 2);
  CHECK_FALSE(j4.at("results").contains("inner_count"));
}

TEST_CASE("golden batteries all pass") {
  for (const char* set : {"gl4", "gln", "sp", "heisenberg", "degeneration", "cosets"}) {
    RunResult r = run({"golden", set});
    REQUIRE_MESSAGE(r.code == 0, set);
    json j = out_json(r);
    REQUIRE(j.is_array());
    for (const auto& entry : j) {
      CHECK_MESSAGE(entry.at("match") == true, entry.at("case_name").get<std::string>());
    }
  }
  RunResult bad = run({"golden", "nope"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("output is byte deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"orbit", "gl_upper:4", "psi_ab(2,3)"},
           {"classify", "heis:2", R"({"z":"1"})"},
           {"golden", "degeneration"},
           {"cosets", "7"}}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("pretty printing changes layout, not content") {
  RunResult compact = run({"orbit", "gl_upper:4", "psi_ab(1,1)"});
  RunResult pretty = run({"orbit", "--pretty", "gl_upper:4", "psi_ab(1,1)"});
  REQUIRE(compact.code == 0);
  REQUIRE(pretty.code == 0);
  CHECK(compact.out != pretty.out);
  CHECK(json::parse(compact.out) == json::parse(pretty.out));
}

TEST_CASE("file input") {
  std::string path = "cli_test_input.json";
  {
    std::ofstream f(path);
    f << R"({"algebra":"gl_upper:4","psi":{"e_1,4":"2","e_2,3":"3"}})";
  }
  RunResult r = run({"orbit", "--file", path});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j.at("results").at("orbit_dimension") == 4);
  CHECK(j.at("results").at("depth") == 3);
}

TEST_CASE("raw algebra JSON input") {
  // A hand-specified Heisenberg triple with custom labels.
  std::string alg = R"({"dim":3,"labels":["x","y","c"],"brackets":[{"i":0,"j":1,"out":[{"k":2,"c":"1"}]}]})";
  RunResult r = run({"orbit", alg, R"({"c":"1"})"});
  REQUIRE(r.code == 0);
  json j = out_json(r);
  CHECK(j.at("results").at("orbit_dimension") == 2);
  CHECK(j.at("results").at("depth") == 2);
}

TEST_CASE("errors exit with code two and a message") {
  SUBCASE("unknown catalog") {
    RunResult r = run({"orbit", "gl_lower:4", "{}"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
  }
  SUBCASE("bad coefficient") {
    RunResult r = run({"orbit", "gl_upper:4", R"({"e_1,2":"1.5"})"});
    CHECK(r.code == 2);
  }
  SUBCASE("unknown label") {
    RunResult r = run({"orbit", "gl_upper:4", R"({"e_9,9":"1"})"});
    CHECK(r.code == 2);
  }
  SUBCASE("stabilizer needs a torus") {
    RunResult r = run({"stabilizer", "heis:2", R"({"z":"1"})"});
    CHECK(r.code == 2);
  }
  SUBCASE("missing arguments are a usage error") {
    RunResult r = run({"orbit"});
    CHECK(r.code != 0);
  }
  SUBCASE("no subcommand prints usage") {
    RunResult r = run({});
    CHECK(r.code != 0);
  }
  SUBCASE("cosets below the threshold") {
    RunResult r = run({"cosets", "3"});
    CHECK(r.code == 2);
  }
}

TEST_CASE("shorthand coverage") {
  // psi_ab is pinned to the four by four case.
  CHECK(run({"orbit", "gl_upper:5", "psi_ab(1,1)"}).code == 2);
  // f(a) picks the long-corner coordinate per family.
  json sp = out_json(run({"orbit", "sp:2", "f(1)"}));
  CHECK(sp.at("results").at("orbit_dimension") == 2);
  json gl = out_json(run({"orbit", "gl_upper:4", "f(3)"}));
  CHECK(gl.at("results").at("depth") == 3);
  // f on a raw algebra has no distinguished coordinate.
  std::string alg = R"({"dim":2,"labels":["x","y"],"brackets":[]})";
  CHECK(run({"orbit", alg, "f(1)"}).code == 2);
}
