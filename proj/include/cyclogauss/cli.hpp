#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclogauss::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclogauss::cli
