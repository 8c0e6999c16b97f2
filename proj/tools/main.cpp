#include <iostream>
#include <string>
#include <vector>

#include "sbw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  sbw::CommandResult r = sbw::run_command(args);
  std::cout << r.output;
  return r.exit_code;
}
