#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polycollatz {

/// Cross-validation suites behind the `check` command. Quick mode runs the
/// exhaustive suites up to degree 10; full mode runs them at the scale of the
/// acceptance suite.
struct CheckOptions {
  bool full = false;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// First failing case, empty on success.
  std::string detail;
};

std::vector<CheckResult> run_checks(const CheckOptions& options);

}  // namespace polycollatz
