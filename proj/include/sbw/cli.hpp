#ifndef SBW_CLI_HPP_
#define SBW_CLI_HPP_

#include <string>
#include <vector>

namespace sbw {

struct CommandResult {
  int exit_code;       // 0 decided-true/success, 1 decided-false,
                       // 2 bounds exhausted, 64 usage error
  std::string output;
};

/// Runs one CLI invocation (args without the program name).  Output is
/// deterministic for fixed inputs and limits.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace sbw

#endif  // SBW_CLI_HPP_
