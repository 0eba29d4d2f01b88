#include "kisin/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  kisin::RunResult r = kisin::run_args(args);
  std::cout << r.output;
  if (!r.error.empty())
    std::cerr << "kisin: " << r.error << '\n';
  return r.exit_code;
}
