#include "scenval/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace scenval {

namespace {

// Autocovariance with divisor T at every lag; empty result marks a
// zero-variance scenario.
std::vector<double> acf_or_empty(std::span<const double> x, std::size_t max_lag) {
  const std::size_t n = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);

  double c0 = 0.0;
  for (double v : x) c0 += (v - mean) * (v - mean);
  c0 /= static_cast<double>(n);
  if (!(c0 > 0.0)) return {};

  std::vector<double> r(max_lag + 1);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    double c = 0.0;
    for (std::size_t t = 0; t + lag < n; ++t) {
      c += (x[t] - mean) * (x[t + lag] - mean);
    }
    r[lag] = (c / static_cast<double>(n)) / c0;
  }
  return r;
}

double curve_mse(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

}  // namespace

AcfCurve acf(std::span<const double> scenario, std::size_t max_lag) {
  if (scenario.size() < 2) throw data_error("acf: scenario needs at least 2 samples");
  if (max_lag < 1 || max_lag > scenario.size() - 1) {
    throw config_error("acf: max_lag must be in [1, T-1]");
  }
  for (double v : scenario) {
    if (!std::isfinite(v)) throw data_error("acf: scenario must be finite");
  }
  auto values = acf_or_empty(scenario, max_lag);
  if (values.empty()) {
    throw data_error("acf: constant scenario has no defined autocorrelation");
  }
  return {std::move(values), 0};
}

MatchResult best_match_by_acf(std::span<const double> reference_scenario,
                              const ScenarioSet& candidates, std::size_t max_lag,
                              std::size_t reference_index) {
  validate(candidates);
  if (max_lag < 1 || max_lag > candidates.n_steps - 1) {
    throw config_error("best_match_by_acf: max_lag must be in [1, T-1]");
  }
  const AcfCurve ref = acf(reference_scenario, max_lag);

  MatchResult result;
  result.reference_index = reference_index;
  result.mse = std::numeric_limits<double>::infinity();
  std::vector<double> all_mses;
  all_mses.reserve(candidates.n_scenarios);

  for (std::size_t c = 0; c < candidates.n_scenarios; ++c) {
    const auto cand = acf_or_empty(candidates.scenario(c), max_lag);
    if (cand.empty()) {
      ++result.skipped_degenerate;
      continue;
    }
    const double mse = curve_mse(ref.values, cand);
    all_mses.push_back(mse);
    if (mse < result.mse) {  // strict: earlier index wins ties
      result.mse = mse;
      result.best_candidate_index = c;
    }
  }

  if (all_mses.empty()) {
    throw data_error("best_match_by_acf: every candidate scenario is degenerate");
  }
  std::sort(all_mses.begin(), all_mses.end());
  all_mses.erase(all_mses.begin());  // winner
  result.runner_up_mses = std::move(all_mses);
  return result;
}

AcfPanel acf_panel(const ScenarioSet& reference, const ScenarioSet& candidates,
                   std::size_t n_examples, std::size_t max_lag, std::uint64_t seed) {
  validate(reference);
  validate(candidates);
  if (n_examples < 1 || n_examples > reference.n_scenarios) {
    throw config_error("acf_panel: n_examples must be in [1, S_reference]");
  }

  // Partial Fisher-Yates over the reference indices.
  std::vector<std::size_t> indices(reference.n_scenarios);
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n_examples; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (indices.size() - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(n_examples);
  std::sort(indices.begin(), indices.end());

  AcfPanel panel;
  panel.caveat =
      "best-match panels compare only the drawn reference scenarios against "
      "their closest candidates; most of the candidate set, including any "
      "outliers, never enters the comparison";
  for (std::size_t idx : indices) {
    const auto match = best_match_by_acf(reference.scenario(idx), candidates, max_lag, idx);
    panel.skipped_degenerate += match.skipped_degenerate;
    AcfPair pair;
    pair.reference = acf(reference.scenario(idx), max_lag);
    pair.reference.scenario_index = idx;
    pair.matched = acf(candidates.scenario(match.best_candidate_index), max_lag);
    pair.matched.scenario_index = match.best_candidate_index;
    pair.mse = match.mse;
    panel.pairs.push_back(std::move(pair));
  }
  return panel;
}

}  // namespace scenval
