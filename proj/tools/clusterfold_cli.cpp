#include <iostream>
#include <vector>

#include "clusterfold/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clusterfold::run_cli(args, std::cout, std::cerr);
}
