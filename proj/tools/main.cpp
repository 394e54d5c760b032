#include <iostream>
#include <string>
#include <vector>

#include "queen3d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return queen3d::cli_main(args, std::cout, std::cerr);
}
