// dser-verify verify --lemma all --ring zmod:10007 --m 4 --n 3 --seed 1 --trials 50 --format json

#include <iostream>
#include <string>
#include <vector>

#include "dser/suite.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dser::run(args, std::cout, std::cerr);
}
