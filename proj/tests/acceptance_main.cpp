// Standalone gate: runs every consistency check once and prints one verdict
// line per criterion, then an overall summary.  Exit status 0 means all green.

#include <algorithm>
#include <cstdio>

#include "isopar/checks.hpp"

int main() {
  const auto results = isopar::run_table_checks();
  int idx = 0;
  for (const auto& r : results) {
    ++idx;
    char timing[64];
    if (r.time_limit > 0.0)
      std::snprintf(timing, sizeof(timing), "%.2fs / limit %.0fs", r.seconds, r.time_limit);
    else
      std::snprintf(timing, sizeof(timing), "%.2fs", r.seconds);
    std::printf("criterion %d: %s -- %s (%s)%s%s\n", idx, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), timing, r.detail.empty() ? "" : "  ", r.detail.c_str());
  }
  const bool ok = isopar::all_checks_passed(results);
  std::printf("ACCEPTANCE: %s (%d/%zu)\n", ok ? "PASS" : "FAIL",
              static_cast<int>(std::count_if(results.begin(), results.end(),
                                             [](const auto& r) { return r.passed; })),
              results.size());
  return ok ? 0 : 1;
}
