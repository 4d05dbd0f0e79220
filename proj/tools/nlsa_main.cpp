#include <iostream>

#include "nlsa/cli.hpp"

int main(int argc, char** argv) {
  const nlsa::CliResult r = nlsa::run_cli(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit;
}
