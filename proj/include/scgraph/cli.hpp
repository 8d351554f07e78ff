#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scgraph::cli {

/// Exit codes: 0 success (witness found where one was requested), 1 verified
/// absence, 2 usage or input error.
enum ExitCode : int { kOk = 0, kAbsent = 1, kUsage = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scgraph::cli
