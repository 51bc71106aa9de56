#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tga/cli.hpp"

using namespace tga;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& file) {
  return std::string(TGA_SOURCE_DIR) + "/data/corpus/" + file;
}

std::string test_data(const std::string& file) {
  return std::string(TGA_SOURCE_DIR) + "/tests/data/" + file;
}

}  // namespace

TEST_CASE("indices in both modes") {
  const auto r = run_cli({"indices", "--tree", corpus("p3.txt"), "-n", "1", "--mode", "both"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["k"] == 3);
  CHECK(doc["n"] == 1);
  CHECK(doc["wiener"]["formula"] == 4);
  CHECK(doc["wiener"]["oracle"] == 4);
  CHECK(doc["wiener"]["agree"] == true);
  for (const char* key : {"diameter", "wiener", "szeged", "pm_count", "spanning_trees",
                          "spanning_forests", "cycle_census", "tutte_factored",
                          "asymptotic_ratio"}) {
    REQUIRE_MESSAGE(doc.contains(key), key);
    CHECK_MESSAGE(doc[key]["agree"].is_boolean(), key);
  }
  CHECK(doc["szeged"]["formula"] == 8);
  CHECK(doc["spanning_trees"]["formula"] == 4);
  CHECK(doc["spanning_trees"]["published"].contains("error"));
}

TEST_CASE("indices report the published variant side by side") {
  const auto r = run_cli({"indices", "--tree", corpus("p3.txt"), "-n", "2"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["variant"] == "corrected");
  CHECK(doc["spanning_trees"]["formula"] == 64);
  CHECK(doc["spanning_trees"]["published"] == 16);
  CHECK(doc["spanning_trees"]["agree"] == true);
  CHECK(doc["spanning_forests"]["formula"] == 2025);
  CHECK(doc["spanning_forests"]["published"] == 225);
  CHECK(doc["tutte_factored"]["formula"]["text"] == "y^6(y+x)^2(y+x+x^2+x^3)^2");
  CHECK(doc["asymptotic_ratio"]["formula"] == "44/135");
  CHECK(doc["asymptotic_ratio"]["published"] == "88/135");
  CHECK(doc["cycle_census"]["formula"]["0"]["2"] == 1);
  CHECK(doc["cycle_census"]["agree"] == true);

  const auto pub = run_cli(
      {"indices", "--tree", corpus("p3.txt"), "-n", "2", "--variant", "published"});
  const auto pdoc = Json::parse(pub.out);
  CHECK(pdoc["spanning_trees"]["formula"] == 16);
  CHECK(pdoc["spanning_trees"]["corrected"] == 64);
  CHECK(pdoc["spanning_trees"]["agree"] == false);
}

TEST_CASE("formula mode needs no graph and handles huge levels") {
  const auto r =
      run_cli({"indices", "--tree", corpus("p4.txt"), "-n", "40", "--mode", "formula"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK_FALSE(doc["wiener"].contains("oracle"));
  CHECK(doc["wiener"]["formula"].is_string());  // wider than 63 bits
  CHECK(doc["pm_count"]["formula"].is_string());
  CHECK(doc["spanning_forests"]["formula"].contains("error"));
}

TEST_CASE("oracle guards are reported, not hidden") {
  const auto r = run_cli({"indices", "--tree", corpus("p2.txt"), "-n", "7"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["pm_count"]["oracle"].is_null());
  CHECK(doc["pm_count"]["agree"].is_null());
  CHECK(doc["pm_count"]["skipped"].is_string());
  CHECK(doc["wiener"]["agree"] == true);
}

TEST_CASE("graph output") {
  const auto r = run_cli({"graph", "--tree", corpus("p2.txt"), "-n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["vertices"].size() == 8);
  CHECK(doc["edges"].size() == 8);
  const auto dot = run_cli({"graph", "--tree", corpus("p3.txt"), "-n", "1", "--format", "dot"});
  CHECK(dot.out.rfind("graph schreier {", 0) == 0);
}

TEST_CASE("automaton output") {
  const auto r = run_cli({"automaton", "--tree", corpus("p3.txt")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph moore {", 0) == 0);
}

TEST_CASE("tutte subcommand") {
  const auto r = run_cli({"tutte", "--tree", corpus("p3.txt"), "-n", "2", "--eval", "2", "1"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["tutte"]["text"] == "y^6(y+x)^2(y+x+x^2+x^3)^2");
  CHECK(doc["published"]["text"] == "y^6(y+x+x^2+x^3)^2");
  CHECK(doc["evaluation"]["value"] == "2025");
  const auto half =
      run_cli({"tutte", "--tree", corpus("p2.txt"), "-n", "1", "--eval", "1/2", "0"});
  CHECK(Json::parse(half.out)["evaluation"]["value"] == "1/2");
  const auto pub = run_cli(
      {"tutte", "--tree", corpus("p3.txt"), "-n", "2", "--eval", "1", "1", "--variant",
       "published"});
  CHECK(Json::parse(pub.out)["evaluation"]["value"] == "16");
}

TEST_CASE("verify subcommand") {
  const auto r = run_cli({"verify", "--corpus", TGA_SOURCE_DIR "/data/corpus", "--max-vertices",
                          "64"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("summary: ") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args{"indices", "--tree", corpus("s4.txt"), "-n", "2"};
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"bogus"}).code == cli::kUsage);
  CHECK(run_cli({"graph", "--tree", corpus("p3.txt")}).code == cli::kUsage);
  CHECK(run_cli({"indices", "--tree", corpus("p3.txt"), "-n", "0"}).code == cli::kUsage);
  CHECK(run_cli({"indices", "--tree", corpus("p3.txt"), "-n", "1", "--mode", "x"}).code ==
        cli::kUsage);
  CHECK(run_cli({"--help"}).code == cli::kOk);

  const auto cycle = run_cli({"indices", "--tree", test_data("triangle.txt"), "-n", "1"});
  CHECK(cycle.code == cli::kInvalidTree);
  CHECK_FALSE(cycle.err.empty());
  CHECK(run_cli({"graph", "--tree", test_data("missing.txt"), "-n", "1"}).code ==
        cli::kInvalidTree);

  CHECK(run_cli({"graph", "--tree", corpus("p3.txt"), "-n", "5", "--vertex-cap", "100"}).code ==
        cli::kSizeGuard);
  CHECK(run_cli({"indices", "--tree", corpus("p3.txt"), "-n", "30"}).code == cli::kSizeGuard);
  CHECK(run_cli({"tutte", "--tree", corpus("p3.txt"), "-n", "30", "--eval", "2", "1"}).code ==
        cli::kSizeGuard);
}
