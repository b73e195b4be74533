#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spaceform::cli {

// Command-line entry point, separated from main() so tests can drive it.
// Exit codes: 0 success, 1 invalid input, 2 failed mathematical check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spaceform::cli
