#include <iostream>
#include <string>
#include <vector>

#include "svet/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return svet::cli::run(args, std::cout, std::cerr);
}
