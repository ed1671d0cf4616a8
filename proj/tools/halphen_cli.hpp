#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace halphen::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kParseError = 2 };

/// Runs one command line (args[0] is the program name).  Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halphen::cli
