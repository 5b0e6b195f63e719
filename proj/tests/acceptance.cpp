// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <cstdio>
#include <iostream>

#include "elastodisk/verify.hpp"

int main() {
  auto results = elastodisk::run_acceptance_checks(&std::cout);
  int failures = 0;
  for (const auto& r : results)
    if (!r.passed) ++failures;
  std::printf("%zu checks, %d failed\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}
