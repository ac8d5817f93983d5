#include <iostream>
#include <string>
#include <vector>

#include "recip/cli.hpp"

int main(int argc, char** argv) {
  return recip::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
