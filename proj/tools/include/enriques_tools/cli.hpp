#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace enriques::tools {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kSelfcheckFailed = 3 };

/// Entry point of the `enriques` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enriques::tools
