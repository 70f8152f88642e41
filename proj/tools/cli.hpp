#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdlc::cli {

/// Runs one command line (arguments after the program name). Exit codes: 0 success, 2 invalid input, 1 internal
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdlc::cli
