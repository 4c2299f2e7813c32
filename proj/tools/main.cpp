#include <iostream>
#include <string>
#include <vector>

#include "taumap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return taumap::run(args, std::cout, std::cerr);
}
