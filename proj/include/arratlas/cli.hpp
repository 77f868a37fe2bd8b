#ifndef ARRATLAS_CLI_HPP
#define ARRATLAS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace arratlas::cli {

/// Runs the arratlas command line: subcommands chi, count, table, enumerate,
/// verify. Returns the process exit code: 0 success, 1 verification
/// mismatch, 2 argument error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arratlas::cli

#endif  // ARRATLAS_CLI_HPP
