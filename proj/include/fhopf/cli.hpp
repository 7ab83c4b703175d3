#ifndef FHOPF_CLI_HPP
#define FHOPF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fhopf::cli {

/// Exit codes: every check passed, a mathematical check failed, invalid input.
enum ExitCode : int { ok = 0, check_failed = 1, invalid_input = 2 };

/// Runs one command line (without the program name), writing the human report
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhopf::cli

#endif  // FHOPF_CLI_HPP
