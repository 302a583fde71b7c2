#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vwdg {

/// Runs the command line tool on `args` (program name excluded).
/// Returns 0 on success, 1 on verification failure or budget refusal, 2 on usage errors.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace vwdg
