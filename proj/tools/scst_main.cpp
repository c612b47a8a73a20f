#include <iostream>

#include "scst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scst::run_cli(args, std::cout, std::cerr);
}
