// Gate binary: runs every acceptance criterion, one line each, nonzero exit
// on any failure. Wall-clock budgets are enforced inside the registry.

#include <hamspec/verify.hpp>

#include <cstdio>
#include <thread>

int main() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const auto results = hamspec::run_acceptance_criteria(threads);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-22s %7.2fs  %s%s%s\n", r.passed ? "PASS" : "FAIL",
                r.id.c_str(), r.seconds, r.description.c_str(),
                r.detail.empty() ? "" : ": ", r.detail.c_str());
    if (!r.passed) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  std::fflush(stdout);
  return failures ? 1 : 0;
}
