#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linksing {

/// Dispatches one CLI invocation. `args` excludes the program name.
/// Returns 0 on success or a passing verification, 1 on a verification
/// mismatch, 2 on a usage error. All output is deterministic.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace linksing
