#include <cstdlib>
#include <iostream>

#include "dani/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("DANI_SEED")) env_seed = s;
  const dani::CliOutcome r = dani::run(args, env_seed);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
