#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pll {

/// Run one tool invocation (args exclude the program name).
/// Reports go to `out` unless --out redirects them to a file; diagnostics go
/// to `err`. Returns 0 on success, 2 on flag or validation errors, 1 on
/// computation errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pll
