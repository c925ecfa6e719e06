#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crnv::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,     ///< I/O and unexpected failures
    kValidationError = 2,
    kResourceLimit = 3,
    kPropertyFailure = 4,
};

/// Entry point of the crnv tool. args excludes the program name. Writes one
/// JSON report to `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crnv::cli
