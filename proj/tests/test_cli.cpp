#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "linksing/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = linksing::cli_run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("homfly-torus") {
  auto r = run({"homfly-torus", "2", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "-a^4 + a^2*q^2 + a^2*q^-2\n");

  auto j = run({"homfly-torus", "2", "3", "--format", "json"});
  CHECK(j.code == 0);
  auto parsed = json::parse(j.out);
  CHECK(parsed["poly"] == "-a^4 + a^2*q^2 + a^2*q^-2");
  CHECK(parsed["k"] == 2);
}

TEST_CASE("skein-t2") {
  auto r = run({"skein-t2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "a^3*z^-1 - a*z - a*z^-1\n");
}

TEST_CASE("semigroup from ring elements") {
  auto r = run({"semigroup", "--series", "t^4, t^6+t^7", "--format", "json"});
  CHECK(r.code == 0);
  auto parsed = json::parse(r.out);
  CHECK(parsed["generators"] == json::array({4, 6, 13}));
  CHECK(parsed["gaps"] == json::array({1, 2, 3, 5, 7, 9, 11, 15}));
  CHECK(parsed["milnor"] == 16);
}

TEST_CASE("semigroup from generators, text") {
  auto r = run({"semigroup", "--gens", "4,6,13"});
  CHECK(r.code == 0);
  CHECK(r.out.find("conductor: 16") != std::string::npos);
  CHECK(r.out.find("delta: 8") != std::string::npos);
}

TEST_CASE("semigroup argument validation") {
  CHECK(run({"semigroup"}).code == 2);
  CHECK(run({"semigroup", "--gens", "2,3", "--series", "t^2"}).code == 2);
  CHECK(run({"semigroup", "--gens", "4,6"}).code == 2);       // not cofinite
  CHECK(run({"semigroup", "--series", "t^"}).code == 2);      // parse error
}

TEST_CASE("modules-table") {
  auto r = run({"modules-table", "--gens", "2,3", "--format", "json"});
  CHECK(r.code == 0);
  auto parsed = json::parse(r.out);
  REQUIRE(parsed["modules"].size() == 2);
  CHECK(parsed["modules"][0]["module"] == json::array({0}));
  CHECK(parsed["modules"][1]["module"] == json::array({0, 1}));
  CHECK(parsed["modules"][1]["shifts"]["threshold"] == 2);
}

TEST_CASE("staircase-series and residue-series") {
  auto r = run({"staircase-series", "2", "3", "--trunc", "10", "--format", "json"});
  CHECK(r.code == 0);
  auto parsed = json::parse(r.out);
  CHECK(parsed["trunc"] == 10);
  CHECK(parsed["coeffs"][0]["q"] == 0);
  CHECK(parsed["coeffs"][0]["coeff"] == "-a^2 + 1");

  auto h = run({"staircase-series", "2", "3", "--histogram", "--trunc", "7"});
  CHECK(h.code == 0);
  CHECK(h.out.find("l=0 m=1 count=1") != std::string::npos);

  auto res = run({"residue-series", "1", "4", "--trunc", "8"});
  CHECK(res.code == 0);
  CHECK(res.out.find("q^0: -a^2 + 1") != std::string::npos);
}

TEST_CASE("alexander routes") {
  auto r = run({"alexander", "--gens", "2,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 - t + t^2\n");

  auto t = run({"alexander", "--torus", "2", "3"});
  CHECK(t.code == 0);
  CHECK(t.out == "1 - t + t^2\n");

  CHECK(run({"alexander", "--torus", "2", "3", "--gens", "2,3"}).code == 2);
}

TEST_CASE("verification subcommands pass") {
  auto r = run({"verify-torus", "2", "3", "--trunc", "60"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);

  auto s = run({"sl1", "2", "3", "--trunc", "40"});
  CHECK(s.code == 0);

  auto q = run({"qbinom-check", "2", "3", "--trunc", "40"});
  CHECK(q.code == 0);
}

TEST_CASE("verify-cable-4613 echoes n0") {
  auto r = run({"verify-cable-4613", "--format", "json"});
  CHECK(r.code == 0);
  auto parsed = json::parse(r.out);
  CHECK(parsed["status"] == "pass");
  CHECK(parsed["n0"] == 23);
}

TEST_CASE("genus") {
  auto r = run({"genus", "--torus", "2", "3", "--format", "json"});
  CHECK(r.code == 0);
  auto parsed = json::parse(r.out);
  CHECK(parsed["coefficients"][0]["n_h_at_zero"] == 2);
  CHECK(parsed["coefficients"][1]["n_h"] == "1");
  CHECK(run({"genus"}).code == 2);
}

TEST_CASE("euler-jacobian") {
  auto r = run({"euler-jacobian", "4", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "14\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  auto r = run({"homfly-torus", "2", "3", "--bogus"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
  CHECK(run({"homfly-torus", "2"}).code == 2);      // missing argument
  CHECK(run({"homfly-torus", "2", "4"}).code == 2); // not coprime
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> invocations[] = {
      {"homfly-torus", "3", "4", "--format", "json"},
      {"modules-table", "--gens", "4,6,13", "--format", "json"},
      {"verify-torus", "2", "5", "--trunc", "60", "--format", "json"},
  };
  for (const auto& inv : invocations) {
    auto a = run(inv);
    auto b = run(inv);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
