#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skolem::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidInput = 2, kUnknown = 3 };

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skolem::cli
