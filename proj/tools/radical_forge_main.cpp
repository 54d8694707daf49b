#include <iostream>

#include "radical/cli.hpp"

int main(int argc, char** argv) {
  return radical::cli::run(argc, argv, std::cout, std::cerr);
}
