#pragma once

#include <string>
#include <vector>

namespace fpw {

struct CheckResult {
  std::string name;
  int criterion;      // acceptance criterion number; 0 = supplementary
  bool pass;
  bool finding_only;  // conjecture checks report failures as findings
  std::string detail;
  double seconds;
};

/// The acceptance battery. The quick tier covers every mandatory check; the
/// full tier adds the z phi(z) pre-power scan, the 331040-letter
/// power-freeness scan, and the complete kernel-rank computation.
std::vector<CheckResult> run_acceptance(bool full, int workers = 0);

}  // namespace fpw
