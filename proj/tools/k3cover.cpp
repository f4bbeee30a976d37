#include <iostream>
#include <string>
#include <vector>

#include "k3cover/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return k3cover::cli::run(args, std::cout, std::cerr);
}
