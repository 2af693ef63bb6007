#include <iostream>
#include <string>
#include <vector>

#include "bdc_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const bdc::cli::Outcome o = bdc::cli::run(args);
  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}
