// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Ratio tables go to $QUARTIC_SIEVE_OUT (default ./acceptance_reports).
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qsieve/acceptance.hpp"

int main(int argc, char** argv) {
  qsieve::AcceptanceOptions options;
  const char* env = std::getenv("QUARTIC_SIEVE_OUT");
  options.out_dir = env && *env ? env : "acceptance_reports";
  options.on_result = [](const qsieve::CriterionResult& r) {
    std::printf("%s\n", qsieve::format_result(r).c_str());
    std::fflush(stdout);
  };
  std::vector<int> only;
  for (int k = 1; k < argc; ++k) only.push_back(std::atoi(argv[k]));

  int failed = 0;
  for (const auto& r : qsieve::run_acceptance(options, only)) failed += r.passed ? 0 : 1;
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
