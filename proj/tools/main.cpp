#include <iostream>
#include <string>
#include <vector>

#include "kneading/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kneading::cli::run(args, std::cout, std::cerr);
}
