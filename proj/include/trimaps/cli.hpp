#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trimaps::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 invalid input or usage, 2 internal invariant violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimaps::cli
