#include <iostream>

#include "sshecke/cli.hpp"

int main(int argc, char** argv) {
  return sshecke::run_cli(argc, argv, std::cout, std::cerr);
}
