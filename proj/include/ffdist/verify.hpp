#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffdist {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::int64_t max_q = 31;
  std::vector<int> dims{2, 3};
  int threads = 0;
  std::uint64_t seed = 20260809;
};

/// Runs the full invariant suite: field identities, Plancherel and transform
/// round-trips, closed-vs-brute character sums, Weil and counting lemmas,
/// Salem diagnostics, both M(q) routes and the exact inequality chain.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

} // namespace ffdist
