#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elastodisk {

/// One acceptance check: a named property of the solver chain with a hard
/// threshold, run at fixed configuration.
struct CheckResult {
  std::string id;
  bool passed = false;
  double runtime_seconds = 0.0;
  std::string detail;
};

/// Runs the full acceptance suite (10 checks).  Progress lines are written to
/// `progress` as each check finishes, when non-null.
std::vector<CheckResult> run_acceptance_checks(std::ostream* progress = nullptr);

}  // namespace elastodisk
