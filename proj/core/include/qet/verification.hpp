#pragma once

#include <string>
#include <vector>

#include "qet/model.hpp"

namespace qet {

struct VerifyOptions {
  /// Largest N in the oracle/closed-form agreement grid.
  unsigned n_max = 10;
  /// Largest N for the dense ground-state check.
  unsigned ground_state_n_max = kDefaultOracleCap;
  unsigned oracle_cap = kDefaultOracleCap;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Cross-checks every closed form against the brute-force oracle and runs
/// the structural property checks. One result per check, in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace qet
