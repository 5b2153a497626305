#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace u2mp {

struct SelftestOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 20240611;
  /// Flips one fixture expectation so the run must fail.
  bool inject_fault = false;
  int threads = 0;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

struct SelftestResult {
  std::vector<SuiteResult> suites;
  [[nodiscard]] bool passed() const;
};

/// Runs the invariant suites and regression fixtures of every module.
SelftestResult run_selftest(const SelftestOptions& opt);

}  // namespace u2mp
