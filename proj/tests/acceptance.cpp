// Acceptance suite: runs every criterion and prints one pass/fail line each.
// --slow additionally runs the 3-qutrit closure inside criterion 8.
#include <cstdio>
#include <cstring>

#include "qcif/selftest.hpp"

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;

  qcif::RunConfig cfg;
  std::vector<qcif::CriterionResult> results = qcif::run_acceptance(cfg, slow);

  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
    if (!r.details.empty()) std::printf("        %s\n", r.details.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed%s\n", static_cast<int>(results.size()) - failures,
              results.size(), slow ? " (slow set included)" : "");
  return failures == 0 ? 0 : 1;
}
