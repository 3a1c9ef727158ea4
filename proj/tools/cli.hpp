#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brio::cli {

enum ExitCode : int { ok = 0, invalid_input = 2, solver_failure = 3 };

/// Runs one command line (without the program name). Data goes to `out`
/// unless --out names a file; diagnostics and usage go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brio::cli
