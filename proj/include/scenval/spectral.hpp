#pragma once

#include "scenval/types.hpp"

namespace scenval {

enum class SpectrumMethod { periodogram, welch };
enum class WindowKind { rectangular, hann };

/// Welch estimation knobs. segment_len 0 picks the default: twice the
/// scenario length for scenario-derived series, otherwise min(N, 256).
struct WelchParams {
  std::size_t segment_len = 0;
  double overlap_fraction = 0.5;
  WindowKind window = WindowKind::hann;
};

/// One-sided power spectral density. Frequencies are in 1/h, the density in
/// signal^2 * h, and the DC bin is never part of the output. The density
/// scaling satisfies Parseval: sum(psd) * df recovers the variance of the
/// (mean-removed) input.
struct Spectrum {
  std::vector<double> frequencies;  // ascending, <= Nyquist
  std::vector<double> psd;          // >= 0
  std::vector<double> periods;      // hours, 1/frequency
  std::vector<bool> flagged;        // set by flag_periods
  double dt_hours = 0.0;
  SpectrumMethod method = SpectrumMethod::periodogram;
  // Welch metadata
  std::size_t segment_len = 0;
  double overlap_fraction = 0.0;
  WindowKind window = WindowKind::rectangular;
  std::size_t n_segments = 1;
  bool single_segment_fallback = false;  // requested overlap yielded < 2 segments
};

/// Plain full-length periodogram of the mean-removed series.
Spectrum periodogram(const TimeSeries& ts);

/// Averaged windowed periodograms over overlapping segments, each segment
/// mean-removed before windowing.
Spectrum welch_psd(const TimeSeries& ts, const WelchParams& params = {});

/// Flag every bin whose period exceeds half the scenario's duration
/// (scenario_len * dt / 2, strict). scenario_len < 2 clears all flags.
Spectrum flag_periods(Spectrum spec, std::size_t scenario_len, double dt_hours);

/// Concatenate, estimate, flag, and restrict both sets to the period range
/// [2 dt, scenario_len * dt] that single scenarios can support. Both spectra
/// share one segment length so their bins line up.
struct PsdReport {
  Spectrum reference;
  Spectrum candidate;
};

PsdReport psd_report(const ScenarioSet& reference, const ScenarioSet& candidate,
                     const WelchParams& params = {});

}  // namespace scenval
