#include <iostream>

#include "vwdg/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vwdg::run_cli(args, std::cin, std::cout, std::cerr);
}
