#pragma once

/// @file cli.hpp
/// @brief ttplon command-line front end (generate, lon, experiment).

#include <iosfwd>
#include <string>
#include <vector>

namespace ttplon::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kUsage = 2,
    kSizeGuard = 3,
    kIncomplete = 4,
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ttplon::cli
