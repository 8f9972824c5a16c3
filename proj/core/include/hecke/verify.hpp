#pragma once

#include <hecke/rational.hpp>

#include <string>
#include <vector>

namespace hecke {

// Shared knobs for the structural verification battery. The battery is
// deterministic for a fixed option set; seed only steers the sampled
// characters and random elements.
struct VerifyOptions {
  int n = 2;
  Rat k = Rat(1);
  Rat k_c = Rat(1, 2);
  int degree = 3;
  unsigned long long seed = 1;
  int samples = 4;
};

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Names of all checks in run order.
std::vector<std::string> verification_names();

// Run one named check; throws std::invalid_argument for an unknown name.
VerifyResult run_single_verification(const std::string& name, const VerifyOptions& opts);

// Run the full battery in order.
std::vector<VerifyResult> run_verification(const VerifyOptions& opts);

}  // namespace hecke
