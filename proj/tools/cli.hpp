#pragma once

#include <iosfwd>

namespace momentcut::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kDomainError = 3,
    kCertificationFailure = 4,
};

/// Runs one command line. Results go to `out` unless -o names a file;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace momentcut::cli
