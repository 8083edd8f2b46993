#include <iostream>
#include <string>
#include <vector>

#include "homsol/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homsol::run_command(args, std::cout);
}
