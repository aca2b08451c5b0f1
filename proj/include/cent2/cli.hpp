#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cent2::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cent2::cli
