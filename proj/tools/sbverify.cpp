#include <iostream>

#include "spherebraid/cli.hpp"

int main(int argc, char** argv) {
  return spherebraid::main_entry(argc, argv, std::cout, std::cerr);
}
