#include <iostream>

#include "superds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return superds::run(args, std::cout, std::cerr);
}
