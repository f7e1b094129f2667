#include <iostream>
#include <string>
#include <vector>

#include "mtrees/tablecli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return mtrees::cli::run_cli(args, std::cout, std::cerr);
}
