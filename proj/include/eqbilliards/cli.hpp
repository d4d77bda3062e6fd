// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or validation error, 3 singular configuration, 4 I/O failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqbilliards::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kSingular = 3,
    kIo = 4,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqbilliards::cli
