#pragma once

// Verification runs over a range of bidegrees, fanned out over worker
// threads and merged in bidegree order.

#include "liehodge/report.hpp"

namespace liehodge {

struct RunConfig {
  std::string pair;
  int p_max = 4;
  Rational s_max = 3;
  Rational d_bound = 3;
  /// Subset of garland, eigen, w, gl, finito, or "all".
  std::vector<std::string> which{"all"};
  unsigned jobs = 1;
};

struct RunResult {
  std::vector<HodgeReport> reports;
  /// Structural oracles, run with "all".
  std::optional<VerificationResult> structure;

  bool passed() const;
};

/// Bidegrees (p, s) with p <= p_max and p/2 <= s <= s_max.
std::vector<std::pair<int, int>> bidegrees(const RunConfig& config);
RunResult run_verify(const HomologyEngine& engine, const RunConfig& config);
json to_json(const RunResult& result, const RunConfig& config);

/// Runs f(0..n-1) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace liehodge
