#include <iostream>
#include <string>
#include <vector>

#include "lamanbkk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lamanbkk::run(args, std::cout, std::cerr);
}
