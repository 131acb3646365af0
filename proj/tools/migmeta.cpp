#include <iostream>
#include <string>
#include <vector>

#include "migmeta/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return static_cast<int>(migmeta::cli::run(args, std::cout, std::cerr));
}
