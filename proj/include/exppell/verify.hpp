#ifndef EXPPELL_VERIFY_HPP
#define EXPPELL_VERIFY_HPP

#include <string>
#include <vector>

#include "exppell/config.hpp"

namespace exppell {

struct CriterionResult {
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;  // first failure, or a short summary
};

/// Runs the six acceptance criteria (Pell suite, norm/kernel suite, growth
/// constants, dependence oracle, reduction round-trip, explicit Lemma-9
/// witnesses) and reports one result per criterion. Deterministic for a
/// fixed Config.
std::vector<CriterionResult> run_acceptance(const Config& cfg);

/// Golden reduction suite entry (exposed for the CLI and tests).
struct SuiteEntry {
  std::string dio;
  bool solvable_over_z;       // ground truth (integer oracle, |x| <= 100)
  bool witness_within_bounds; // documented outcome at the given bounds
  std::string note;
};

const std::vector<SuiteEntry>& golden_suite();

}  // namespace exppell

#endif
