#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framemod {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured vs required values
  double runtime_ms = 0.0;
};

struct ValidateOptions {
  bool full = true;  // false: analytic checks only, no grid solves
  // Test seam: scales mu inside check 1 so a corrupted kernel is seen
  // to fail. 1.0 in normal operation.
  double fault_mu_scale = 1.0;
};

// Runs the validation suite (checks 1-4 analytic, 5-10 add grid solves)
// and returns one result per check.
std::vector<CriterionResult> run_validation(const ValidateOptions& opt);

void print_validation_report(const std::vector<CriterionResult>& results,
                             std::ostream& os);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace framemod
