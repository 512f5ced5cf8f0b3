#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "clari/env.hpp"

namespace clari {

// Renders a diagnostic. Text mode: file:line:col: error[CODE]: message plus
// expected/actual blocks. JSON mode: one object per line.
std::string formatDiagnostic(const Diagnostic& d, bool json);

// Exit codes: 0 success, 1 check/stability failure, 2 parse error,
// 3 fuel exhausted, 4 usage error.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clari
