// One line per acceptance criterion; exit status is the number of failures.
#include <cstdio>

#include "motivic/verify.hpp"

int main() {
  // seconds allowed per criterion
  constexpr double budget[] = {0, 10, 10, 10, 300, 300, 600, 30, 60, 5, 10, 30, 60};
  int failures = 0;
  for (int id = 1; id <= motivic::acceptance_count(); ++id) {
    motivic::CheckResult r = motivic::run_acceptance(id);
    const bool in_time = r.seconds <= budget[id];
    const bool ok = r.passed && in_time;
    if (!ok) ++failures;
    std::printf("%s %2d %-32s %8.3fs  %s%s\n", ok ? "PASS" : "FAIL", id, r.name.c_str(), r.seconds, r.detail.c_str(),
                in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", motivic::acceptance_count() - failures, motivic::acceptance_count());
  return failures;
}
