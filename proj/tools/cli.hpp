#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffgraph::cli {

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Returns the process exit code: 0 on success, 2 for
/// usage errors, 3 validation, 4 capacity, 5 internal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffgraph::cli
