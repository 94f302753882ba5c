#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bc {

// Full command-line driver: parses args (not including the program name),
// runs the requested subcommand, writes results to `out` and diagnostics to
// `err`, and returns the process exit code:
//   0 success, 1 failed check, 2 parse error, 3 range error, 4 domain error,
//   5 uncertifiable precision.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bc
