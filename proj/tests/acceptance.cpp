// One line per reproduction check; nonzero exit if any check fails.

#include <cstdio>

#include "bvorb/verify.hpp"

int main() {
  const auto results = bv::run_reproduction_checks();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s %-4s %s", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.description.c_str());
    if (!r.detail.empty()) std::printf(" [%s]", r.detail.c_str());
    std::printf("\n");
    if (!r.passed) ++failed;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
