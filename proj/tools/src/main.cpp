#include <iostream>
#include <string>
#include <vector>

#include "mmlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmlab::cli::run(args, std::cout, std::cerr);
}
