#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kdec::cli {

/// Exit codes. yes/no/inconclusive are the machine contract of every
/// deciding subcommand.
enum Exit : int {
  exit_yes = 0,
  exit_no = 1,
  exit_inconclusive = 2,
  exit_disagreement = 3,
  exit_input_error = 4,
  exit_usage = 64,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdec::cli
