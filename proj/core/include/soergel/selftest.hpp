#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace soergel {

/// One line of the acceptance battery. `detail` is deterministic given the seed;
/// `seconds` is wall time and is never part of the report text.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct SelftestReport {
  std::uint64_t seed = 42;
  std::vector<CriterionResult> criteria;

  [[nodiscard]] bool pass() const;
  /// One "PASS"/"FAIL" line per criterion, no timings.
  [[nodiscard]] std::string text() const;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1..10); exceptions become failures with the message as detail.
CriterionResult run_criterion(int id, std::uint64_t seed);
/// Runs the listed criteria in increasing order, all of them when `only` is empty.
SelftestReport run_selftest(std::uint64_t seed, const std::set<int>& only = {});

}  // namespace soergel
