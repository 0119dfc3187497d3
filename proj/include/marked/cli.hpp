#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace marked::cli {

/// Exit codes of run().
enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2 };

/// Run the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace marked::cli
