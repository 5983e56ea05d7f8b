#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sagt::cli {

struct CheckResult {
  std::string name;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  int grid = 51;
  double tol = 1e-8;
  std::uint64_t seed = 2024;
};

/// Symmetry, covariance, trace, block-structure and cost-scaling checks over
/// an s-grid for all builtin schedules.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace sagt::cli
