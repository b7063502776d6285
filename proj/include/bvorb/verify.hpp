#pragma once

// Reproduction checks for the published classification. Each check compares
// values assembled by the builder against closed forms or tabulated values,
// with exact integer equality.

#include <string>
#include <vector>

namespace bv {

struct CheckResult {
  std::string id;           // e.g. "5c"
  std::string description;
  bool passed = false;
  std::string detail;       // computed values, or the first counterexample
};

std::vector<CheckResult> run_reproduction_checks();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace bv
