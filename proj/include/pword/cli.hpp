// cli.hpp -- command-line front end (analyze / construct / verify / search)

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pword {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2, // usage, parse and resource errors
};

/// Runs the tool. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err);

} // namespace pword
