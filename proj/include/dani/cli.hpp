// Command-line front end.  Exit codes: 0 success, 2 invalid input, 1 internal error.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dani {

struct CliOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// args excludes the program name.  env_seed is the value of DANI_SEED, if set.
CliOutcome run(const std::vector<std::string>& args, const std::optional<std::string>& env_seed = std::nullopt);

}  // namespace dani
