#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pvfl/errors.hpp"

namespace pvfl::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 2,
    kNumeric = 3,
    kIo = 4,
};

/// 3 for NoConvergence, 4 for I/O failures, 2 for everything else.
int exit_code_for(ErrorCode code) noexcept;

/// Runs one `pvfl` invocation. `args` excludes the program name. Results go
/// to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pvfl::cli
