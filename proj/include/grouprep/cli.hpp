#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace grouprep::cli {

// Runs one command-line invocation (args exclude the program name); normal
// output goes to `out`, diagnostics to `err`.  Exit status: 0 success,
// 1 at least one invariant check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace grouprep::cli
