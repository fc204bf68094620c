#include <iostream>

#include "qmirror/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qmirror::cli::run(args, std::cout, std::cerr);
}
