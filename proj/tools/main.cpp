#include <iostream>
#include <string>
#include <vector>

#include "derivpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return derivpoly::run_cli(args, std::cout, std::cerr);
}
