#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclounits {

/// Runs one command line (args excludes the program name). Result records go
/// to `out`, diagnostics to `err`. Returns 0 on success, 1 for usage and parse
/// errors, 2 for domain errors (a = 0, f = 0, size limits).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclounits
