#include <iostream>

#include "tfg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tfg::cli::run(args, std::cout);
}
