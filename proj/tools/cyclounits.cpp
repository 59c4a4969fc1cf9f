#include <iostream>
#include <string>
#include <vector>

#include "cyclounits/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclounits::run(args, std::cout, std::cerr);
}
