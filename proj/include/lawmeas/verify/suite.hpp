#ifndef LAWMEAS_VERIFY_SUITE_HPP
#define LAWMEAS_VERIFY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lawmeas::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::int64_t cases = 0;  // individual checks performed
  std::string detail;      // first failure, deterministic; empty on pass
  double seconds = 0.0;    // wall time; reporting only, never in stable output
};

struct SuiteOptions {
  // Clamps every carrier sweep; the CLI accepts 1..4. Criteria whose stated
  // sizes are below the clamp keep their stated sizes.
  int max_carrier = 3;
  // Acceptance mode: run every criterion at its stated size, ignoring
  // max_carrier.
  bool full = false;
};

// Runs the eight property suites in order; each result is deterministic for
// fixed options (fixed seeds, canonical iteration) apart from `seconds`.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts);

}  // namespace lawmeas::verify

#endif
