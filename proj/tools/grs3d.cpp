#include <iostream>
#include <string>
#include <vector>

#include "grs3d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grs3d::cli::run(args, std::cout, std::cerr);
}
