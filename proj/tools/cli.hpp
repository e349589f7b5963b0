#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grover::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kCapExceeded = 3,
};

/// Runs one invocation. args excludes the program name. Reports go to out
/// (or the --out file), diagnostics and warnings to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grover::cli
