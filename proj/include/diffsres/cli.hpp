#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffsres {

// Process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_usage = 2,
  exit_domain = 3,
  exit_range = 4,
  exit_not_commuting = 5,
};

// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffsres
