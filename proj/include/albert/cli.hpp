#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace e6 {

/// Runs the command-line front end.  Exit codes: 0 success or verification
/// pass, 1 verification failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e6
