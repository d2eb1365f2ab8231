#include <iostream>
#include <string>
#include <vector>

#include "blockmod/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const blockmod::cli::CommandOutput out = blockmod::cli::run(args);
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}
