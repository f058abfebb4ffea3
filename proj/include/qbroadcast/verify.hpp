// The full property suite behind the CLI verify command: oracle equivalence,
// PPT-vs-minors, discord closed-form-vs-oracle, theorem sweeps, zone and
// range cross-checks, plus report-only comparisons.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace qbroadcast {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool informational = false;  // report-only, never fails the run
  std::string detail;
};

/// Runs the named checks (all when `only` is empty). `inject_failure`
/// corrupts the oracle tolerance to exercise the failure path.
std::vector<CheckResult> run_verification(std::uint64_t seed,
                                          const std::set<std::string>& only = {},
                                          bool inject_failure = false);

/// Names accepted by the `only` filter.
std::vector<std::string> verification_check_names();

}  // namespace qbroadcast
