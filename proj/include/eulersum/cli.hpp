#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulersum::cli {

enum class Format { plain, json };

struct OutputConfig {
    Format format = Format::plain;
    int precision_digits = 15;
};

/// Exit codes: 0 success, 1 verification or tolerance failure, 2 usage or domain error.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Runs the command line `args` (without the program name), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersum::cli
