#pragma once

// Command-line driver: `build`, `verify <suite>` and `export`.
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace gaudin::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaudin::cli
