#include <iostream>
#include <string>
#include <vector>

#include "bvorb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return bv::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "bvorb: " << e.what() << '\n';
    return 3;
  }
}
