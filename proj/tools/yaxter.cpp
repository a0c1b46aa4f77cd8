#include <iostream>
#include <string>
#include <vector>

#include "yaxter/cli.hpp"

int main(int argc, char** argv) {
  return yaxter::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
