#ifndef OPABS_VALIDATE_HPP
#define OPABS_VALIDATE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace opabs {

// Self-check suite wired to the CLI `validate` subcommand: cross-checks every
// analytic quantity against the Fock-space oracle and exercises the module
// invariants.  `full` adds the cutoff-doubling convergence studies.

enum class ValidateLevel { quick, full };

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidateOptions {
  ValidateLevel level = ValidateLevel::quick;
  int cutoff = 40;
  // test fixture: corrupts the sign of the detection exponent's s*t
  // coefficient to prove the oracle comparison catches a broken model
  bool inject_detection_x4_fault = false;
};

struct ValidateReport {
  std::vector<CheckResult> checks;
  int failed = 0;
  bool all_passed() const { return failed == 0; }
};

ValidateReport run_validation(const ValidateOptions& opts);

// machine-readable report (JSON)
void write_report(std::ostream& os, const ValidateReport& report,
                  const ValidateOptions& opts);

}  // namespace opabs

#endif
