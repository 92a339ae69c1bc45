#include <iostream>

#include "diffsres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return diffsres::run_cli(args, std::cout, std::cerr);
}
