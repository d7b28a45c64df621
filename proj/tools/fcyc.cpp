#include <iostream>

#include "fcyc/cli.hpp"

int main(int argc, char** argv) {
  return fcyc::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
