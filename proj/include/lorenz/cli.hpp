#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorenz {

/// Command line driver. args excludes the program name.
/// Exit codes: 0 success, 2 usage or parse error, 3 inadmissible or invalid
/// input, 4 verification mismatch, 5 resource cap exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorenz
