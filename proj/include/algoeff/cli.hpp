#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algoeff::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInvalid = 2,      // validation, parse, shape or missing-file errors
    kExitNotReached = 3,   // analyze: curve never reaches the threshold
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace algoeff::cli
