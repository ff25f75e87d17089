#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropcount {

// Full command-line driver; returns the process exit code. Errors print a
// single machine-readable JSON line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tropcount
