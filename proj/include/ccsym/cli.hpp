#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccsym {

/// Parses and dispatches one command line (without the program name).
/// Exit codes: 0 success / all checks pass, 1 check failures, 2 usage or
/// parse errors.  Identical argument vectors produce identical output bytes.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccsym
