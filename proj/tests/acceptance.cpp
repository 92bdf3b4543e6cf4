// Acceptance battery: one pass/fail line per criterion, supplementary checks
// after. --full adds the long-running scans and the complete kernel rank.

#include <cstdio>
#include <cstring>
#include <map>

#include "fpword/checks.hpp"

int main(int argc, char** argv) {
  bool full = false;
  int workers = 0;
  for (int t = 1; t < argc; ++t) {
    if (std::strcmp(argv[t], "--full") == 0) full = true;
    if (std::strncmp(argv[t], "--workers=", 10) == 0) workers = std::atoi(argv[t] + 10);
  }

  auto results = fpw::run_acceptance(full, workers);

  std::map<int, std::pair<bool, std::string>> by_criterion;
  bool ok = true;
  for (const auto& r : results) {
    bool counts = r.pass || r.finding_only;
    if (!counts) ok = false;
    std::string line = r.name + (r.pass ? "" : r.finding_only ? " [finding]" : " [FAILED]") +
                       ": " + r.detail;
    if (r.criterion == 0) {
      std::printf("%-4s supplementary      %7.1fs  %s\n", counts ? "PASS" : "FAIL", r.seconds,
                  line.c_str());
      continue;
    }
    auto& slot = by_criterion[r.criterion];
    if (slot.second.empty()) {
      slot = {counts, line};
    } else {
      slot.first = slot.first && counts;
      slot.second += " | " + line;
    }
  }
  for (const auto& [criterion, slot] : by_criterion)
    std::printf("%-4s criterion %-2d  %s\n", slot.first ? "PASS" : "FAIL", criterion,
                slot.second.c_str());

  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
  return ok ? 0 : 1;
}
