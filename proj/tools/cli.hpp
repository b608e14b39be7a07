#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3lat::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics and progress to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace k3lat::cli
