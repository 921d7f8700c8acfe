#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mnsr::cli {

// Dispatches one subcommand and writes its report to `out`. Returns the
// process exit code: 0 when every requested check passed, 1 when a check
// failed (a witness is printed), 2 on usage or input-format errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace mnsr::cli
