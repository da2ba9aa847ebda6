#ifndef SCHUBERT_CHECKS_HPP
#define SCHUBERT_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

namespace schubert {

struct CheckOptions {
  int n = 4;         // sweeps run over S_n, and over S_{n+1} where a larger group is asked for
  bool slow = false; // Groebner sweep over S_{n+1} plus the 13865742 instance
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int criterion_count = 10;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const CheckOptions& opt);
// Runs criteria 1..10 in order, reporting each result as it finishes.
std::vector<CriterionResult> run_acceptance(const CheckOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report = {});

} // namespace schubert

#endif
