#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dani/cli.hpp"
#include "dani/expr.hpp"
#include "dani/random.hpp"
#include "dani/serialize.hpp"

using namespace dani;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string l; std::getline(ss, l);) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

}  // namespace

TEST_CASE("text round trip") {
  Rng rng(71);
  for (const auto& p : {RatPoly{0, -1, 1}, RatPoly{0, -1, 0, 1}, RatPoly{1, 0, 1, 0, 1}}) {
    SurfaceSpec s(p);
    for (int k = 0; k < 30; ++k) {
      SurfacePoly f = random_function(rng, s, -3, 3, 5, 9);
      CHECK(parse_function(s, format(f)) == f);
      CHECK(parse_function(s, format(f, true)) == f);
    }
    CHECK(parse_univariate(format(p)) == p);
  }
  SurfaceSpec s(RatPoly{0, -1, 0, 1});
  CHECK(format(parse_function(s, "y*x")) == "z^3 - z");
  CHECK(format(parse_function(s, "x*z/2")) == "1/2*x*z");
  CHECK(parse_function(s, "(u + 2*w)^2 - v") == parse_function(s, "x^2 + 4*x*z + 4*z^2 - y"));
  for (const char* bad : {"x +", "2^x", "x/z", "x/0", "q", "(x", "x)", "x^-1", ""}) {
    CHECK_THROWS_AS(parse_function(s, bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(parse_univariate("x + z"), std::invalid_argument);
}

TEST_CASE("automorphism JSON round trip") {
  Rng rng(72);
  SurfaceSpec s(RatPoly{0, -1, 0, 1});
  for (int k = 0; k < 20; ++k) {
    AutElement g = random_element(rng, s, k % 6, 3, 10);
    const Json j = to_json(g);
    CHECK(aut_from_json(s, Json::parse(j.dump())) == g);
    CHECK(to_json(aut_from_json(s, j)).dump() == j.dump());
  }
  CHECK_THROWS_AS(aut_from_json(s, Json::parse(R"({"word":[{"side":"Z","a":["1"]}],"torus":"1"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(aut_from_json(s, Json::parse(R"({"word":[],"torus":"0"})")), std::invalid_argument);
  CHECK_THROWS_AS(aut_from_json(s, Json::parse(R"({"word":[]})")), std::invalid_argument);
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
}

TEST_CASE("commands") {
  auto ok = [](const std::vector<std::string>& args) {
    CliOutcome r = run(args);
    INFO(r.err);
    CHECK(r.exit_code == 0);
    return Json::parse(r.out);
  };
  CHECK(run({"bracket", "--p", "z^3-z", "-x", "y"}).out == "{\"command\":\"bracket\",\"p\":\"z^3 - z\",\"result\":\"3*z^2 - 1\"}\n");
  CHECK(ok({"bracket", "--p-coeffs", "0,-1,0,1", "-x", "y"})["result"] == "3*z^2 - 1");
  CHECK(ok({"bracket", "--p", "z^3-z", "x*z^2", "y*z"})["result"] == "-6*z^5 + 4*z^3");
  CHECK(ok({"apply", "--p", "z^3-z", "--field", "x,-y,0", "x^2 + y"})["result"] == "2*x^2 - y");
  CHECK(ok({"divergence", "--p", "z^3-z", "--field", "x^2,-x*y,0"})["result"] == "x");
  CHECK(ok({"dualize", "--p", "z^3-z", "--field", "0,3*z^2-1,x"})["function"] == "-x");
  CHECK(ok({"dualize", "--p", "z^3-z", "z"})["field"] == Json::parse(R"({"a":"x","b":"-y","c":"0"})"));
  auto d = ok({"decompose", "--p", "z^3-z", "z"});
  CHECK(d["in_lnd"] == false);
  CHECK(d["torus_coeffs"] == Json::parse(R"(["1"])"));
  auto c = ok({"compose", "--p", "z^3-z", R"({"word":[{"side":"X","a":["1"]}],"torus":"2"})",
               R"({"word":[{"side":"X","a":["1"]}],"torus":"1"})"});
  CHECK(c["result"] == Json::parse(R"({"word":[{"side":"X","a":["3/2"]}],"torus":"2"})"));
  auto inv = ok({"compose", "--inverse", "--p", "z^3-z", R"({"word":[{"side":"Y","a":["0","2"]}],"torus":"1"})"});
  CHECK(inv["result"] == Json::parse(R"({"word":[{"side":"Y","a":["0","-2"]}],"torus":"1"})"));
  CHECK(ok({"ad", "--p", "z^3-z", "--field", "0,3*z^2-1,x", "--element", R"({"word":[],"torus":"2"})"})["result"] ==
        Json::parse(R"({"a":"0","b":"3/2*z^2 - 1/2","c":"1/2*x"})"));
  auto o = ok({"outer", "--p", "z^3+2*z+1"});
  CHECK(o["generic"] == true);
  auto cl = ok({"classify", "--p", "z^2-z", "--q", "w^2-1/4"});
  CHECK(cl["isomorphic"] == true);
  CHECK(cl["witnesses"][1] == Json::parse(R"({"a":"1","b":"1/2","c":"1","swap":false})"));
  CHECK(ok({"classify", "--p", "z^3-z", "--q-coeffs", "1,-1,0,1"})["isomorphic"] == false);
}

TEST_CASE("saturate writes a trace that replays") {
  const auto path = std::filesystem::temp_directory_path() / "dani_cli_trace.jsonl";
  CliOutcome r = run({"saturate", "--p", "z^3-z", "--dx", "3", "--dz", "4", "--trace-out", path.string(), "y*z"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["full"] == true);
  CHECK(j["status"] == "fixpoint reached");
  const auto text = slurp(path);
  CHECK(Json::parse(lines(text).front())["kind"] == "header");
  CliOutcome back = run({"replay", "--trace", path.string()});
  REQUIRE(back.exit_code == 0);
  CHECK(Json::parse(back.out)["rank"] == j["rank"]);
  CHECK(Json::parse(back.out)["full"] == true);
  CHECK(run({"replay", path.string()}).out == back.out);
  std::ofstream(path, std::ios::binary) << text.substr(0, text.size() / 2) << "{\"kind\":\"step\"}\n";
  CHECK(run({"replay", "--trace", path.string()}).exit_code == 2);
  std::filesystem::remove(path);
  CliOutcome budget = run({"saturate", "--p", "z^3-z", "--budget", "1", "x"});
  CHECK(Json::parse(budget.out)["status"] == "budget exhausted before fixpoint");
}

TEST_CASE("invalid input exits with 2") {
  const std::vector<std::vector<std::string>> cases{
      {},
      {"frobnicate"},
      {"bracket", "--p", "z^2", "x", "y"},
      {"bracket", "--p", "z^3-z", "x +", "y"},
      {"bracket", "--p", "z^3-z", "x"},
      {"bracket", "--p", "z^3-z", "--bogus", "x", "y"},
      {"bracket", "x", "y"},
      {"bracket", "--p", "z^3-z", "--p-coeffs", "0,-1,0,1", "x", "y"},
      {"bracket", "--p-coeffs", "0,1/0", "x", "y"},
      {"apply", "--p", "z^3-z", "--field", "x,0,0", "z"},
      {"dualize", "--p", "z^3-z", "--field", "x^2,-x*y,0"},
      {"compose", "--p", "z^3-z", "{\"word\":"},
      {"compose", "--p", "z^3-z", "@/nonexistent/file.json"},
      {"ad", "--p", "z^3-z", "--field", "x,-y,0"},
      {"classify", "--p", "z^3-z"},
      {"saturate", "--p", "z^3-z", "--dx", "0", "x"},
      {"saturate", "--p", "z^3-z", "x^9"},
      {"replay", "--trace", "/nonexistent/trace.jsonl"},
      {"check", "--p", "z^3-z", "--seed", "-1"},
      {"check", "--p", "z^3-z", "--samples", "0"},
  };
  for (const auto& args : cases) {
    CliOutcome r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    INFO(joined);
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"check", "--p", "z^3-z"}, std::string("abc")).exit_code == 2);
}

TEST_CASE("seeded runs are deterministic") {
  const std::vector<std::string> args{"check", "--p", "z^3-z", "--samples", "3"};
  CliOutcome a = run(args, std::string("7")), b = run(args, std::string("7"));
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["seed"] == 7);
  CHECK(Json::parse(run(args).out)["seed"] == 0);
  std::vector<std::string> explicit_seed = args;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "9"});
  CHECK(Json::parse(run(explicit_seed, std::string("7")).out)["seed"] == 9);
}

TEST_CASE("golden outputs through the library entry point") {
  const std::filesystem::path dir(DANI_GOLDEN_DIR);
  int seen = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".args") continue;
    ++seen;
    auto expected = e.path();
    expected.replace_extension(".out");
    INFO(e.path().string());
    CliOutcome r = run(lines(slurp(e.path())));
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(expected));
  }
  CHECK(seen >= 3);
}
