#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msym::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kVerificationFailed = 2,
  kUsage = 64,
  kInternal = 70,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msym::cli
