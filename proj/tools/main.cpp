#include <iostream>

#include "ktruss/cli.hpp"

int main(int argc, char** argv) {
  return ktruss::cli::run(argc, argv, std::cout, std::cerr);
}
