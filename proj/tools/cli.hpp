#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stochrat::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,          ///< parse or validation failure
  kGeometry = 3,       ///< non-overlapping budgets or off-line bundle
  kPowerPrecondition = 4,
  kEmptySample = 5,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::uint64_t seed = 1;
  std::uint64_t reps = 10000;
  std::vector<std::uint64_t> sizes{10, 50, 100, 500, 1000};
  std::string method = "closed_form";
  std::string scheme = "multinomial";
  std::string format = "json";
  bool table2 = false;
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stochrat::cli
