#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdl {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Oracle-equivalence and invariant suites backing `pdlcap verify`.
// fast: n <= 3 checks (< 10 s); full adds the n = 4 dense and blocked-path
// cross checks. The seed drives every randomized sample.
std::vector<VerifyCheck> run_verification(bool full, std::uint64_t seed);

}  // namespace pdl
