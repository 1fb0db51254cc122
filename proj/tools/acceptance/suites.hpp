#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "toporing/io.hpp"

namespace toporing::acceptance {

struct SuiteContext {
  std::filesystem::path data_dir;
  std::uint64_t seed = 1;
};

/// Outcome of one criterion. `report` is deterministic in (data, seed); timing is kept apart.
struct SuiteOutcome {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  /// A failure that contradicts an equivalence of perfectness conditions (a bug, exit status 4).
  bool inconsistency = false;
  io::Json report;
  double elapsed_seconds = 0;
  bool passed() const { return failures.empty() && instances > 0 && elapsed_seconds < limit_seconds; }
};

inline constexpr int kSuiteCount = 10;
/// Wall-clock limits in seconds for criteria 1..10.
inline constexpr double kLimits[kSuiteCount] = {30, 30, 30, 60, 10, 30, 60, 60, 10, 300};

/// Runs criterion 1..9 and times it.
SuiteOutcome run_suite(int id, const SuiteContext& ctx);
/// Criterion 10: reruns 1..9 and compares the canonical reports with `first`.
SuiteOutcome run_determinism(const SuiteContext& ctx, const std::vector<SuiteOutcome>& first);
/// All ten criteria in order.
std::vector<SuiteOutcome> run_all(const SuiteContext& ctx);
/// Canonical report of a run (no timings).
io::Json combined_report(const std::vector<SuiteOutcome>& outcomes, const SuiteContext& ctx);
/// "criterion N: PASS|FAIL  title  (instances, elapsed / limit)"
std::string summary_line(const SuiteOutcome& o);

}  // namespace toporing::acceptance
