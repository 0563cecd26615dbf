#include <iostream>

#include "chaingeo/cli.hpp"

int main(int argc, char** argv) {
  return chaingeo::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
