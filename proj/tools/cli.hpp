#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tlaut::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 accepted or ok, 1 rejected or negative, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlaut::cli
