#ifndef WEYLCHAR_TOOLS_CLI_HPP
#define WEYLCHAR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace weylchar::cli {

/// Runs one CLI invocation; argv excludes the program name.
/// Exit codes: 0 success, 1 computational failure (caps, term guard,
/// failed checks), 2 usage error (bad flags, syntax errors).
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

}  // namespace weylchar::cli

#endif  // WEYLCHAR_TOOLS_CLI_HPP
