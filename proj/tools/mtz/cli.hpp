#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtz::cli {

enum ExitCode : int { kPass = 0, kError = 1, kFailure = 2, kBudget = 3 };

// Entry point of the `mtz` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtz::cli
