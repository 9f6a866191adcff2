#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adsig {

// Command-line front end. args excludes the program name. Exit codes:
// 0 all checks passed, 1 a verification mismatch was found (report still
// written in full), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adsig
