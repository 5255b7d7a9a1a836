#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cubebrick {

struct VerifyOptions {
  std::size_t n = 3;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  /// Perturbs the forward map inside the suites; used to check that the
  /// suites can fail.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Self-check on one random unit-volume brick: round trip, agreement with
/// the dense oracle (n <= 4), realization norms and factorization (n <= 64)
/// and per-coordinate KS uniformity. Deterministic for a fixed seed.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace cubebrick
