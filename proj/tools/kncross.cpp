#include <iostream>

#include "kncross/cli.hpp"

int main(int argc, char** argv) {
  return kncross::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
