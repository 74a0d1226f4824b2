#pragma once

#include <string>
#include <vector>

namespace engine_cli {

// Dispatches one command line (without the program name). Returns the
// process exit status: 0 for success, 2 when a checked conjecture fails,
// 1 for usage or invariant errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace engine_cli
