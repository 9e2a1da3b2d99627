// verify.hpp — self-verification suites: oracle equivalences and conserved
// quantities, runnable end to end from the CLI.
#pragma once

#include <string>
#include <vector>

namespace entdyn::verify {

enum class SuiteStatus { Pass, Fail, Skip };

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::string detail;
};

// Used by the self-test of the verification harness: flips the sign of the
// revival threshold inside the criteria-counts suite, which must make it fail.
enum class FaultInjection { None, ThresholdSign };

struct VerifyOptions {
  std::vector<double> lambda_over_w = {0.1, 0.2};
  FaultInjection fault = FaultInjection::None;
};

// Runs, per lambda/W value: integrator-vs-closed-form checks, the
// Wootters-vs-closed-form concurrence sweep, the count-formula-vs-numeric-scan
// sweep (skipped outside strong coupling), the constant-partition check and
// the C_N endpoint check.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

int count_failures(const std::vector<SuiteResult>& results);

}  // namespace entdyn::verify
