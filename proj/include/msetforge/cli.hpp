#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msetforge {

/// Runs one subcommand. JSON (or CSV for scans) goes to `out`, diagnostics
/// to `err`. Returns 0 on success, 2 when not covered or partial, 1 on error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msetforge
