#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidlift::cli {

enum ExitCode : int {
    ok = 0,
    bad_input = 2,
    validation_failure = 3,
    unliftable = 4,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidlift::cli
