#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aqg::cli {

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2, semantic_error = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace aqg::cli
