#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facs::cli {

// Executes one invocation. Data goes to `out`, diagnostics to `err`.
// Returns 0 on success, 1 on verification failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Renders `table` and `verify` twice with a fixed seed and compares bytes.
bool outputs_deterministic(std::string* detail);

} // namespace facs::cli
