#include <iostream>

#include "atlas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return atlas::run(args, std::cout, std::cerr);
}
