#pragma once

#include <string>
#include <vector>

namespace gelfand {

struct CheckResult {
  std::string name;
  std::string module;
  std::string paper_ref;  // which statement the check exercises, in words
  bool passed = false;
  double error = 0;
  double tolerance = 0;
  std::string message;  // set when the check threw
};

struct VerifyOptions {
  int n_max = 3;
  double tolerance_scale = 1.0;  // multiplies every floating tolerance
};

// Every module's invariant checks at n = 0..n_max (expensive ones capped at
// n = 2).  Deterministic: fixed seeds, fixed summation order.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace gelfand
