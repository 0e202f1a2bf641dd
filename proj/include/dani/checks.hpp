// Randomized invariant suite behind `dani check`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dani/ring.hpp"

namespace dani {

struct CheckOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

std::vector<CheckOutcome> run_invariant_suite(const SurfaceSpec& s, std::uint64_t seed, int samples);

}  // namespace dani
