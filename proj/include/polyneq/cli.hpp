#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyneq::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kExitPass = 0,
    kExitUsage = 1,
    kExitViolation = 2,
    kExitHypothesis = 3,
};

/// Entry point behind the polyneq executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polyneq::cli
