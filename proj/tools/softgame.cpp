#include <iostream>
#include <string>
#include <vector>

#include "softgame/cli.hpp"

int main(int argc, char* argv[]) {
  return softgame::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
