#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qsieve {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  // Where the ratio-report tables are archived.
  std::string out_dir = ".";
  unsigned threads = 0;
  // Called as each criterion finishes, in order.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriteriaCount = 11;

// Runs the selected criteria (all when `only` is empty) in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, const std::vector<int>& only = {});

// "PASS  3 twist identity (0.41 s): ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace qsieve
