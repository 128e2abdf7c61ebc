#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twd::cli {

inline constexpr const char* kReportSchema = "twd.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInputError = 2,
};

struct Outcome {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
};

/// Runs one invocation; args excludes the program name. Nothing is written
/// to the process streams except reads of standard input for "-".
Outcome run(const std::vector<std::string>& args);

} // namespace twd::cli
