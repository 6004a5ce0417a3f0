#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tricone {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // non-member, failed lift hypothesis, not a facet
  kExitUsage = 2,     // usage or parse error
};

/// Entry point of the `tricone` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricone
