#include <iostream>

#include "sgfact/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgfact::cli::run(args, std::cout, std::cerr);
}
