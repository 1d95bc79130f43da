#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace menage {

/// Runs one menage-kit invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace menage
