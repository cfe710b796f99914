#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deltacol::cli {

/// Runs one command line (args exclude the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltacol::cli
