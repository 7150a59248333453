#include "scenval/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"

namespace scenval {

namespace {

void check_series(const TimeSeries& ts, std::size_t min_len) {
  if (ts.values.size() < min_len) {
    throw data_error("spectrum: series needs at least " + std::to_string(min_len) + " samples");
  }
  if (!(ts.dt_hours > 0.0)) throw data_error("spectrum: sampling interval must be positive");
  for (double v : ts.values) {
    if (!std::isfinite(v)) throw data_error("spectrum: series must be finite");
  }
}

double population_variance(const std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(x.size());
}

std::vector<double> make_window(WindowKind kind, std::size_t len) {
  std::vector<double> w(len, 1.0);
  if (kind == WindowKind::hann) {
    for (std::size_t i = 0; i < len; ++i) {
      w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(len));
    }
  }
  return w;
}

void fill_axes(Spectrum& spec, std::size_t transform_len) {
  const double fs = 1.0 / spec.dt_hours;
  const std::size_t n_bins = transform_len / 2;  // k = 1 .. floor(len/2), DC dropped
  spec.frequencies.resize(n_bins);
  spec.periods.resize(n_bins);
  for (std::size_t k = 1; k <= n_bins; ++k) {
    const double f = static_cast<double>(k) * fs / static_cast<double>(transform_len);
    spec.frequencies[k - 1] = f;
    spec.periods[k - 1] = 1.0 / f;
  }
  spec.flagged.assign(n_bins, false);
}

}  // namespace

Spectrum periodogram(const TimeSeries& ts) {
  check_series(ts, 4);
  if (!(population_variance(ts.values) > 0.0)) {
    throw data_error("periodogram: constant series has a degenerate spectrum");
  }

  const std::size_t n = ts.values.size();
  double mean = 0.0;
  for (double v : ts.values) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> centered(n);
  for (std::size_t i = 0; i < n; ++i) centered[i] = ts.values[i] - mean;

  const detail::Dft dft(n);
  const auto bins = dft.forward(centered);

  Spectrum spec;
  spec.dt_hours = ts.dt_hours;
  spec.method = SpectrumMethod::periodogram;
  fill_axes(spec, n);

  const double fs = 1.0 / ts.dt_hours;
  const std::size_t n_bins = spec.frequencies.size();
  spec.psd.resize(n_bins);
  for (std::size_t k = 1; k <= n_bins; ++k) {
    const bool nyquist = (n % 2 == 0) && (k == n_bins);
    const double scale = (nyquist ? 1.0 : 2.0) / (fs * static_cast<double>(n));
    spec.psd[k - 1] = scale * std::norm(bins[k]);
  }
  return spec;
}

Spectrum welch_psd(const TimeSeries& ts, const WelchParams& params) {
  check_series(ts, 4);
  if (!(params.overlap_fraction >= 0.0 && params.overlap_fraction < 1.0)) {
    throw config_error("welch_psd: overlap_fraction must be in [0, 1)");
  }
  if (!(population_variance(ts.values) > 0.0)) {
    throw data_error("welch_psd: constant series has a degenerate spectrum");
  }

  const std::size_t n = ts.values.size();
  std::size_t seg = params.segment_len;
  if (seg == 0) {
    seg = ts.scenario_len >= 2 ? 2 * ts.scenario_len : std::min<std::size_t>(n, 256);
    seg = std::min(seg, n);
  }
  if (seg > n) throw config_error("welch_psd: segment_len exceeds the series length");
  if (seg < 4) throw config_error("welch_psd: segment_len must be at least 4");

  const auto window = make_window(params.window, seg);
  double window_power = 0.0;
  for (double w : window) window_power += w * w;

  const double raw_step = static_cast<double>(seg) * (1.0 - params.overlap_fraction);
  const std::size_t step = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(raw_step)));
  std::vector<std::size_t> starts;
  for (std::size_t a = 0; a + seg <= n; a += step) starts.push_back(a);

  Spectrum spec;
  spec.dt_hours = ts.dt_hours;
  spec.method = SpectrumMethod::welch;
  spec.segment_len = seg;
  spec.overlap_fraction = params.overlap_fraction;
  spec.window = params.window;
  spec.n_segments = starts.size();
  spec.single_segment_fallback = starts.size() < 2;
  fill_axes(spec, seg);

  const double fs = 1.0 / ts.dt_hours;
  const std::size_t n_bins = spec.frequencies.size();
  spec.psd.assign(n_bins, 0.0);

  const detail::Dft dft(seg);
  std::vector<double> buffer(seg);
  for (std::size_t a : starts) {
    double seg_mean = 0.0;
    for (std::size_t i = 0; i < seg; ++i) seg_mean += ts.values[a + i];
    seg_mean /= static_cast<double>(seg);
    for (std::size_t i = 0; i < seg; ++i) {
      buffer[i] = (ts.values[a + i] - seg_mean) * window[i];
    }
    const auto bins = dft.forward(buffer);
    for (std::size_t k = 1; k <= n_bins; ++k) {
      const bool nyquist = (seg % 2 == 0) && (k == n_bins);
      const double scale = (nyquist ? 1.0 : 2.0) / (fs * window_power);
      spec.psd[k - 1] += scale * std::norm(bins[k]);
    }
  }
  const double inv_segments = 1.0 / static_cast<double>(starts.size());
  for (double& p : spec.psd) p *= inv_segments;
  return spec;
}

Spectrum flag_periods(Spectrum spec, std::size_t scenario_len, double dt_hours) {
  if (spec.frequencies.size() != spec.psd.size() ||
      spec.periods.size() != spec.psd.size()) {
    throw data_error("flag_periods: malformed spectrum");
  }
  spec.flagged.assign(spec.psd.size(), false);
  if (scenario_len < 2) return spec;  // no scenario structure, nothing to flag
  const double bound = static_cast<double>(scenario_len) * dt_hours / 2.0;
  for (std::size_t i = 0; i < spec.periods.size(); ++i) {
    spec.flagged[i] = spec.periods[i] > bound;
  }
  return spec;
}

PsdReport psd_report(const ScenarioSet& reference, const ScenarioSet& candidate,
                     const WelchParams& params) {
  validate(reference);
  validate(candidate);
  if (reference.dt_hours != candidate.dt_hours) {
    throw data_error("psd_report: reference and candidate sampling intervals differ");
  }

  const TimeSeries ref_ts = concatenate(reference);
  const TimeSeries cand_ts = concatenate(candidate);

  WelchParams resolved = params;
  if (resolved.segment_len == 0) {
    resolved.segment_len = std::min(2 * ref_ts.scenario_len,
                                    std::min(ref_ts.values.size(), cand_ts.values.size()));
  }

  const auto restrict_and_flag = [&](Spectrum spec, std::size_t scenario_len) {
    spec = flag_periods(std::move(spec), scenario_len, spec.dt_hours);
    const double period_hi = static_cast<double>(scenario_len) * spec.dt_hours;
    const double period_lo = 2.0 * spec.dt_hours;
    std::size_t out = 0;
    for (std::size_t i = 0; i < spec.psd.size(); ++i) {
      // Keep bins a single scenario can support; 1e-9 slack absorbs the
      // rounding in periods computed as 1/frequency.
      if (spec.periods[i] > period_hi * (1.0 + 1e-9) ||
          spec.periods[i] < period_lo * (1.0 - 1e-9)) {
        continue;
      }
      spec.frequencies[out] = spec.frequencies[i];
      spec.psd[out] = spec.psd[i];
      spec.periods[out] = spec.periods[i];
      spec.flagged[out] = spec.flagged[i];
      ++out;
    }
    spec.frequencies.resize(out);
    spec.psd.resize(out);
    spec.periods.resize(out);
    spec.flagged.resize(out);
    return spec;
  };

  PsdReport report;
  report.reference = restrict_and_flag(welch_psd(ref_ts, resolved), reference.n_steps);
  report.candidate = restrict_and_flag(welch_psd(cand_ts, resolved), candidate.n_steps);
  return report;
}

}  // namespace scenval
