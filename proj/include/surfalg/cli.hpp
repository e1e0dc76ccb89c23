#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace surfalg::cli {

// Dispatches one invocation; returns the process exit code.
// 0 success, 1 domain/precision failure, 2 malformed input or usage.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace surfalg::cli
