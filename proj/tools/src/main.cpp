#include <iostream>

#include "eir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eir::run_cli(args, std::cout, std::cerr);
}
