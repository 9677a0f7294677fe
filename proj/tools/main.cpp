#include <iostream>
#include <string>
#include <vector>

#include "freewalk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return freewalk::cli::run(args, std::cout, std::cerr);
}
