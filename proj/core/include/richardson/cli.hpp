#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richardson {

/// Command-line driver behind the richardson binary. args excludes the
/// program name. Returns the process exit code: 0 on success / all checks
/// verified, 1 on a verification failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace richardson
