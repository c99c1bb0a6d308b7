#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wythoff::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,              // verified / consistent / output written
  kCounterexample = 1,  // a check found a discrepancy
  kUsage = 2,           // bad flags or parameters
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// All I/O goes through the given streams so the commands are testable.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wythoff::cli
