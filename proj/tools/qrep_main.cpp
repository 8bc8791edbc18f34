#include <iostream>

#include "qrep/cli.hpp"

int main(int argc, char** argv) {
  return qrep::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
