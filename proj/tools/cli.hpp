#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lch::cli {

enum ExitCode : int {
    kOk = 0,
    kVerdictNegative = 1,
    kUsage = 2,
    kVerification = 3,
    kBudget = 4,
};

/// Runs the `lchdga` command line. `args` excludes the program name.
/// FILE arguments of `-` read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lch::cli
