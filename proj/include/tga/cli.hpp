#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tga::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidTree = 2,
  kSizeGuard = 3,
  kVerificationMismatch = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tga::cli
