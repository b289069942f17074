#include <iostream>

#include "qitool/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qitool::run(args, std::cout, std::cerr);
}
