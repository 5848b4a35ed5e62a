#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cstree::cli {

enum ExitCode : int { success = 0, check_failure = 1, usage_error = 2 };

/// Parses `args` (without the program name), runs the selected subcommand
/// and writes its result to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cstree::cli
