#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cosmetry::cli {

/// Runs the cosmetry command line with the given arguments (program name
/// excluded). Returns 0 on success, 1 on input errors, 2 on internal
/// errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cosmetry::cli
