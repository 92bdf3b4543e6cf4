#include <iostream>
#include <vector>

#include "fpword/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fpw::dispatch(std::move(args), std::cout);
}
