#include <iostream>

#include "apngamma/driver.hpp"

int main(int argc, char** argv) {
  return apngamma::run_cli(argc, argv, std::cout, std::cerr);
}
