// Acceptance runner: executes the eight property suites at their stated
// sizes and prints one pass/fail line per criterion. The per-criterion time
// budgets are enforced here as well. Exit 0 only when everything holds.

#include <cstdio>

#include "lawmeas/verify/suite.hpp"

int main() {
  const auto results =
      lawmeas::verify::run_acceptance_suite(lawmeas::verify::SuiteOptions{4, true});

  // Stated wall-clock budgets, in seconds, per criterion id (0 = none).
  const double budgets[9] = {0, 10.0, 0, 0, 60.0, 120.0, 0, 0, 0};

  bool all = true;
  for (const auto& r : results) {
    bool ok = r.pass;
    const double budget = budgets[r.id];
    if (budget > 0 && r.seconds >= budget) ok = false;
    std::printf("[%s] criterion %d: %s (%lld checks, %.2f s%s)\n",
                ok ? "PASS" : "FAIL", r.id, r.name.c_str(),
                static_cast<long long>(r.cases), r.seconds,
                budget > 0 ? (r.seconds < budget ? ", within budget" : ", OVER BUDGET")
                           : "");
    if (!r.pass) std::printf("       %s\n", r.detail.c_str());
    all = all && ok;
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
