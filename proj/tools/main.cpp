#include <iostream>
#include <string>
#include <vector>

#include "ls2pc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ls2pc::cli::run(args, std::cout, std::cerr);
}
