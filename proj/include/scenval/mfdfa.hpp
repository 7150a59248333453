#pragma once

#include <optional>

#include "scenval/types.hpp"

namespace scenval {

/// Centered cumulative sum of a series; its last entry telescopes to zero.
struct Profile {
  std::vector<double> values;

  std::size_t source_len() const { return values.size(); }
};

enum class SegmentationMode { sliding, nonoverlapping };

/// Fluctuation-analysis configuration. Empty s_values are resolved per
/// series: every integer from detrend_order + 2 up to the scenario length
/// (or up to min(N/4, 128) for a series without scenario structure).
struct MfdfaConfig {
  std::vector<double> q_values = {2.0, 4.0, 10.0, -2.0, -4.0, -10.0};
  int detrend_order = 1;
  std::vector<std::size_t> s_values;
  SegmentationMode mode = SegmentationMode::sliding;
  double variance_floor = 1e-30;
};

struct HurstFit {
  double exponent = 0.0;
  double std_error = 0.0;
};

/// F_q(s) over the (q, s) grid plus everything needed to interpret it:
/// which segment lengths exceed half the scenario length, and how many
/// segment variances were clamped to the floor (the negative-q guard).
struct FluctuationSurface {
  std::vector<std::size_t> s_values;
  std::vector<double> q_values;
  std::vector<double> fluctuation;          // row-major [q][s], > 0
  std::vector<std::size_t> clamped_segments;  // row-major [q][s]
  std::vector<bool> flagged_s;              // s >= scenario_len / 2
  std::vector<HurstFit> hurst;              // per q, filled by hurst_fit
  std::size_t scenario_len = 0;

  double at(std::size_t qi, std::size_t si) const {
    return fluctuation[qi * s_values.size() + si];
  }
  std::size_t clamps_at(std::size_t qi, std::size_t si) const {
    return clamped_segments[qi * s_values.size() + si];
  }
};

Profile profile(const TimeSeries& ts);

/// Mean squared residual of an order-m polynomial fit, one value per segment.
/// Non-overlapping segments tile from the front and drop the tail remainder;
/// sliding segments advance one sample at a time (N - s + 1 of them).
std::vector<double> segment_variances(const Profile& p, std::size_t s, int detrend_order,
                                      SegmentationMode mode);

FluctuationSurface fluctuation_function(const TimeSeries& ts, const MfdfaConfig& cfg);

/// Ordinary least squares of log2 F_q(s) on log2 s per q, over unflagged s
/// inside the inclusive range (whole surface when omitted). Needs at least 3
/// usable points.
FluctuationSurface hurst_fit(FluctuationSurface surface,
                             std::optional<std::pair<std::size_t, std::size_t>> s_fit_range =
                                 std::nullopt);

struct MfdfaReport {
  FluctuationSurface reference;
  FluctuationSurface candidate;
};

MfdfaReport mfdfa_report(const ScenarioSet& reference, const ScenarioSet& candidate,
                         const MfdfaConfig& cfg = {});

}  // namespace scenval
