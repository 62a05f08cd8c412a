#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtree {

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 domain or parse error,
/// 3 verification or cross-check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dtree
