// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>

#include "core/repro.hpp"

int main() {
  const auto results = ghcloud::run_acceptance_suite();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%2d/%2zu] %-4s %-45s %7.2fs%s%s\n", r.id, results.size(),
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
