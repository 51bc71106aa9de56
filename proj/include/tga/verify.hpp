#pragma once

// Formula-versus-oracle cross-checks over a corpus of seed trees.

#include <cstdint>
#include <string>
#include <vector>

#include "tga/tree.hpp"

namespace tga {

enum class CheckStatus {
  kPass,
  kFail,
  // A published formula deviating from the oracle where it is known to.
  kDiscrepancy,
  kSkipped,
};

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string instance;  // e.g. "P3 n=2" or "P3"
  std::string check;
  CheckStatus status;
  std::string detail;
};

struct CorpusEntry {
  std::string name;
  OrientedTree tree;
};

// P2..P5, S4, S5 and the spider with legs 2, 2, 1.
std::vector<CorpusEntry> default_corpus();
// Every *.txt tree file in dir, sorted by file name; names drop the extension.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct VerifyOptions {
  std::uint64_t max_vertices = 4096;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus status) const;
  bool ok() const { return count(CheckStatus::kFail) == 0; }
};

VerifyReport verify_tree(const CorpusEntry& entry, const VerifyOptions& options);
VerifyReport run_verification(const std::vector<CorpusEntry>& corpus,
                              const VerifyOptions& options);

// One line per check plus a summary; byte-identical across runs.
std::string format_ledger(const VerifyReport& report);

}  // namespace tga
