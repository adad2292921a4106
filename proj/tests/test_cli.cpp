#include "diffcat/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using diffcat::run_cli;
using json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

} // namespace

TEST_CASE("eval and derive") {
  const Run e = run({"eval", "--model", "findiff", "--term", "(d (prim sq))", "--at", "(3, 2)"});
  CHECK(e.code == 0);
  CHECK(e.out == "16\n");
  const Run d = run({"derive", "--term", "(comp (prim sq) id)"});
  CHECK(d.code == 0);
  CHECK(d.out == "(comp (d (prim sq)) (pair (comp id pi0) pi1))\n");
  CHECK(run({"derive", "--term", "(prim sq)", "--order", "0"}).out == "(prim sq)\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "--model", "findiff", "--space", "Z7", "--subjects", "5"}).code == 0);
  const Run fail = run({"check", "--model", "findiff", "--space", "Z5", "--axioms",
                        "CDC2-additivity", "--subjects", "0"});
  CHECK(fail.code == 1);
  CHECK(json::parse(fail.out)["violations_total"].get<int>() > 0);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "--model", "nonsense"}).code == 2);
  CHECK(run({"check", "--axioms", "CdC99"}).code == 2);
  CHECK(run({"check", "--format", "xml"}).code == 2);
  CHECK(run({"eval", "--term", "(comp", "--at", "1"}).code == 2);
  CHECK(run({"lambda-check", "--model", "smooth"}).code == 2);
  const Run bad = run({"check", "--model", "module:r=2", "--space", "R1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("diffkit: ", 0) == 0);
  CHECK(run({"check", "--help"}).code == 0);
}

TEST_CASE("json report shape") {
  const Run r = run({"monad-laws", "--model", "smooth", "--subjects", "2", "--seed", "5"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["version"] == 1);
  CHECK(j["command"] == "monad-laws --model smooth --subjects 2 --seed 5");
  CHECK(j["model"] == "smooth");
  CHECK(j["seed"] == 5);
  CHECK(j["violations_total"] == 0);
  CHECK(j["elapsed_ms"].is_number_integer());
  REQUIRE(j["results"].is_array());
  CHECK_FALSE(j["results"].empty());
  for (const auto& rep : j["results"])
    for (const char* key : {"axiom", "model", "subject", "status", "checked", "violations"})
      CHECK(rep.contains(key));
}

TEST_CASE("same seed gives the same results") {
  const std::vector<std::string> args{"check", "--model", "smooth", "--subjects", "6",
                                      "--seed", "77", "--samples", "32"};
  const json a = json::parse(run(args).out);
  const json b = json::parse(run(args).out);
  CHECK(a["results"] == b["results"]);

  ::setenv("DIFFKIT_SEED", "77", 1);
  const json c = json::parse(
      run({"check", "--model", "smooth", "--subjects", "6", "--seed", "1", "--samples", "32"})
          .out);
  ::setenv("DIFFKIT_SEED", "x", 1);
  const int bad = run(args).code;
  ::unsetenv("DIFFKIT_SEED");
  CHECK(c["seed"] == 77);
  CHECK(c["results"] == a["results"]);
  CHECK(bad == 2);
}

TEST_CASE("table format") {
  const Run r = run({"kleisli-check", "--model", "module:r=2", "--subjects", "1", "--format",
                     "table", "--samples", "16"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations_total=0") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("user primitives and algebra candidates") {
  const std::string prims =
      write_temp("diffkit_prims.json", R"({"space": "Z5", "table": [0, 1, 4, 4, 1], "name": "sqt"})");
  const Run p = run({"check", "--model", "findiff", "--space", "Z5", "--primitives", prims,
                     "--subjects", "0"});
  CHECK(p.code == 0);
  bool saw = false;
  const json pj = json::parse(p.out);
  for (const auto& rep : pj["results"])
    saw |= rep["subject"] == "sqt";
  CHECK(saw);
  const std::string short_table =
      write_temp("diffkit_short.json", R"({"space": "Z5", "table": [0, 1], "name": "s"})");
  CHECK(run({"check", "--space", "Z5", "--primitives", short_table}).code == 2);
  CHECK(run({"check", "--primitives", "/nonexistent/diffkit.json"}).code == 2);

  const std::string good =
      write_temp("diffkit_nu.json", R"({"space": "Z3", "nu": [0, 1, 2, 1, 2, 0, 2, 0, 1]})");
  CHECK(run({"algebra-check", "--model", "findiff", "--nu", good}).code == 0);
  const std::string bad =
      write_temp("diffkit_nu_bad.json", R"({"space": "Z3", "nu": [0, 2, 1, 1, 0, 2, 2, 1, 0]})");
  CHECK(run({"algebra-check", "--model", "findiff", "--nu", bad}).code == 1);
  CHECK(run({"algebra-check", "--model", "module:r=2"}).code == 0);
}

TEST_CASE("lambda-check") {
  const Run r = run({"lambda-check", "--subjects", "3", "--max-size", "4", "--seed", "2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["model"] == "findiff");
}
