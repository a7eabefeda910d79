#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

/// Runs the command line given argv-style arguments (excluding the program
/// name).  Exit codes: 0 success, 2 validation failure, 1 internal error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
