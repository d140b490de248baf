#include <iostream>
#include <string>
#include <vector>

#include "soergel_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return soergel::cli::run(args, std::cout, std::cerr);
}
