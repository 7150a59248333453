#pragma once

#include <cstdint>
#include <span>

#include "scenval/types.hpp"

namespace scenval {

/// Pearson autocorrelation of one scenario over lags 0..values.size()-1.
/// values[0] is exactly 1.
struct AcfCurve {
  std::vector<double> values;
  std::size_t scenario_index = 0;

  std::size_t max_lag() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Biased (divisor-T) autocovariance normalized by the scenario's own
/// population variance. Keeps |R| <= 1 and stays well behaved at long lags on
/// short scenarios. Throws data_error for constant (zero-variance) input.
AcfCurve acf(std::span<const double> scenario, std::size_t max_lag);

struct MatchResult {
  std::size_t reference_index = 0;
  std::size_t best_candidate_index = 0;
  double mse = 0.0;
  std::vector<double> runner_up_mses;    // ascending, losers only
  std::size_t skipped_degenerate = 0;    // zero-variance candidates
};

/// Candidate whose ACF is closest to the reference scenario's in mean squared
/// error over lags 0..max_lag. Ties break toward the lowest index.
MatchResult best_match_by_acf(std::span<const double> reference_scenario,
                              const ScenarioSet& candidates, std::size_t max_lag,
                              std::size_t reference_index = 0);

struct AcfPair {
  AcfCurve reference;
  AcfCurve matched;
  double mse = 0.0;
};

struct AcfPanel {
  std::vector<AcfPair> pairs;
  std::size_t skipped_degenerate = 0;
  std::string caveat;  // fixed reminder of what a best-match panel cannot show
};

/// Draw n_examples reference scenarios uniformly without replacement (seeded,
/// reproducible) and pair each with its best-matching candidate.
AcfPanel acf_panel(const ScenarioSet& reference, const ScenarioSet& candidates,
                   std::size_t n_examples, std::size_t max_lag, std::uint64_t seed);

}  // namespace scenval
