#include <iostream>

#include "dwl/cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return dwl::cli::run(argc, argv, std::cout, std::cerr);
}
