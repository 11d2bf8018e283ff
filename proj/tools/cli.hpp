#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudoloc::cli {

// Exit codes are part of the contract.
enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kParseError = 2,
  kNotPseudotree = 3,
  kSizeCap = 4,
  kKOutOfRange = 5,
};

// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pseudoloc::cli
