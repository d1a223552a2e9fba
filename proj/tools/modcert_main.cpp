#include <iostream>
#include <string>
#include <vector>

#include "modcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return modcert::run_cli(args, std::cout, std::cerr);
}
