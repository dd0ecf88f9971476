#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcg::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool correct = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool passed() const { return correct && seconds <= limit_seconds; }
};

struct Options {
  /// Worker threads for the two census criteria.
  int jobs = 1;
  /// Runs only the listed criteria when nonempty.
  std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance(const Options& options, std::ostream* progress = nullptr);

/// "PASS [n] title (1.23 s / limit 60 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace mcg::acceptance
