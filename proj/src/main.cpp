#include <iostream>

#include "sodlab/cli.hpp"

int main(int argc, char** argv) {
  return sodlab::run_cli(argc, argv, std::cout, std::cerr);
}
