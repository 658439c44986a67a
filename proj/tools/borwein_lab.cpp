#include <iostream>
#include <string>
#include <vector>

#include "borwein/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return borwein::cli::run(args, std::cout, std::cerr);
}
