#include "doctest.h"
#include "tga/verify.hpp"

using namespace tga;

namespace {

std::size_t count_check(const VerifyReport& report, const std::string& check, CheckStatus status) {
  std::size_t hits = 0;
  for (const auto& r : report.results) hits += r.check == check && r.status == status;
  return hits;
}

}  // namespace

TEST_CASE("default corpus") {
  const auto corpus = default_corpus();
  REQUIRE(corpus.size() == 7);
  CHECK(corpus.front().tree.vertex_count() == 2);
  CHECK(corpus.back().tree.vertex_count() == 6);
}

TEST_CASE("corpus directory matches the built-in corpus") {
  const auto loaded = load_corpus(std::string(TGA_SOURCE_DIR) + "/data/corpus");
  const auto builtin = default_corpus();
  REQUIRE(loaded.size() == builtin.size());
  for (const auto& entry : builtin) {
    bool found = false;
    for (const auto& other : loaded) found |= other.tree.edges() == entry.tree.edges();
    CHECK_MESSAGE(found, entry.name);
  }
}

TEST_CASE("verification on a small bound") {
  VerifyOptions options;
  options.max_vertices = 64;
  const auto report = run_verification(default_corpus(), options);
  CHECK(report.ok());
  CHECK(report.count(CheckStatus::kFail) == 0);
  CHECK(report.count(CheckStatus::kPass) > 100);
  // Published deviations are reported, never hidden.
  CHECK(count_check(report, "spanning-trees", CheckStatus::kDiscrepancy) > 0);
  CHECK(count_check(report, "tutte-block", CheckStatus::kDiscrepancy) > 0);
  CHECK(count_check(report, "asymptotic-ratio", CheckStatus::kDiscrepancy) > 0);
  CHECK(count_check(report, "diameter (d_G=1)", CheckStatus::kDiscrepancy) > 0);
  for (const auto& r : report.results) {
    if (r.status == CheckStatus::kSkipped) CHECK_FALSE(r.detail.empty());
  }
}

TEST_CASE("ledger text is deterministic") {
  VerifyOptions options;
  options.max_vertices = 32;
  const auto a = format_ledger(run_verification(default_corpus(), options));
  const auto b = format_ledger(run_verification(default_corpus(), options));
  CHECK(a == b);
  CHECK(a.find("[PASS] P3 n=1 :: wiener :: formula 4 == oracle 4") != std::string::npos);
  CHECK(a.rfind("summary: ") != std::string::npos);
}

TEST_CASE("a failed check makes the report not ok") {
  VerifyReport report;
  report.results.push_back({"X", "wiener", CheckStatus::kDiscrepancy, "published"});
  CHECK(report.ok());
  report.results.push_back({"X", "wiener", CheckStatus::kFail, "formula 1 != oracle 2"});
  CHECK_FALSE(report.ok());
  CHECK(format_ledger(report).find("[FAIL] X :: wiener :: formula 1 != oracle 2") !=
        std::string::npos);
}
