#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace verlinde::cli {

enum ExitCode : int { ok = 0, invalid_parameters = 2, consistency_failure = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace verlinde::cli
