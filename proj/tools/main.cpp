#include <iostream>
#include <string>
#include <vector>

#include "dessins/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dessins::run_cli(args, std::cout, std::cerr);
}
