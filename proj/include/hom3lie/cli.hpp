#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hom3lie {

/// Runs one CLI command (arguments without the program name) and writes the
/// report to out. Exit codes: 0 all checks pass, 1 mathematical violations,
/// 2 malformed input / usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out);

} // namespace hom3lie
