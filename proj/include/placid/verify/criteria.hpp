#pragma once

// The acceptance suite: twelve pinned checks, each with its own time limit.
// A criterion passes only if its check succeeds and it finishes in time.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace placid::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool check_ok = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;

  bool passed() const { return check_ok && seconds < limit_seconds; }
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  /// Frozen UT3 witness re-verified by criterion 11; skipped when empty.
  std::string fixture_path;
  /// Overrides the largest rank of the scalable lattice and path checks.
  std::optional<int> rank;
};

constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const SuiteOptions& options);

/// Criterion ids for a named group: identity, tableau, rho, lattice, paths,
/// separation, all.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_suite(std::span<const int> ids, const SuiteOptions& options);

/// "[PASS] 07 chain-length bound (0.01s / 60s): ..."
std::string format_result(const CriterionResult& r);

}  // namespace placid::acceptance
