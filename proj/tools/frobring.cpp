#include <iostream>
#include <string>
#include <vector>

#include "frobring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const frob::cli::RunResult res = frob::cli::run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
