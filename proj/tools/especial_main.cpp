#include <iostream>
#include <string>
#include <vector>

#include "especial/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return especial::run(args, std::cout, std::cerr);
}
