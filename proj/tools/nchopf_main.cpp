#include <iostream>
#include <string>
#include <vector>

#include "nchopf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nchopf::run_cli(args, std::cout, std::cerr);
}
