#include <iostream>
#include <string>
#include <vector>

#include "antichain_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return antichain::cli::main_entry(args, std::cout, std::cerr);
}
