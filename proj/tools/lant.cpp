#include <iostream>

#include "lant/cli.hpp"

int main(int argc, char** argv) {
  return lant::cli::run(argc, argv, std::cout, std::cerr);
}
