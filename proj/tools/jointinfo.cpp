#include <iostream>

#include "jointinfo/cli.hpp"

int main(int argc, char **argv) {
  return jointinfo::cli::main_entry(argc, argv, std::cout, std::cerr);
}
