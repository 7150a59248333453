#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scenval/spectral.hpp"
#include "scenval/synthetic.hpp"
#include "test_util.hpp"

using namespace scenval;

namespace {

TimeSeries sine_series(double amplitude, std::size_t period_steps, std::size_t n,
                       double dt = 0.25) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::sine;
  spec.amplitude = amplitude;
  spec.period_steps = period_steps;
  spec.n = n;
  spec.dt_hours = dt;
  return generate(spec);
}

TimeSeries white_series(std::size_t n, std::uint64_t seed, double dt = 0.25) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.n = n;
  spec.dt_hours = dt;
  return generate(spec);
}

double psd_integral(const Spectrum& spec) {
  const double df = spec.frequencies[0];  // bins are equispaced from f_1 = df
  double acc = 0.0;
  for (double p : spec.psd) acc += p;
  return acc * df;
}

double population_variance(const std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(x.size());
}

double variance_across_bins(const std::vector<double>& psd) {
  return population_variance(psd);
}

}  // namespace

TEST_CASE("periodogram locates a 6 h tone and conserves its power") {
  // period 6 h at dt 0.25 h = 24 samples
  const TimeSeries ts = sine_series(1.7, 24, 4096);
  const Spectrum spec = periodogram(ts);

  const std::size_t peak = std::distance(
      spec.psd.begin(), std::max_element(spec.psd.begin(), spec.psd.end()));
  const double df = spec.frequencies[0];
  CHECK(std::fabs(spec.frequencies[peak] - 1.0 / 6.0) <= df + 1e-12);

  const double a2_half = 1.7 * 1.7 / 2.0;
  CHECK(psd_integral(spec) == doctest::Approx(a2_half).epsilon(0.02));

  // Parseval is an identity for the periodogram, not just an approximation.
  const double var = population_variance(ts.values);
  CHECK(psd_integral(spec) == doctest::Approx(var).epsilon(1e-9));
}

TEST_CASE("parseval holds for odd and non-power-of-two lengths") {
  for (std::size_t n : {1000ULL, 4097ULL, 35040ULL}) {
    const TimeSeries ts = white_series(n, n);
    const Spectrum spec = periodogram(ts);
    CHECK(psd_integral(spec) ==
          doctest::Approx(population_variance(ts.values)).epsilon(1e-9));
    CHECK(spec.frequencies.back() <= 1.0 / (2.0 * ts.dt_hours) + 1e-12);
  }
}

TEST_CASE("white noise periodogram is flat in band averages") {
  const TimeSeries ts = white_series(1 << 14, 99);
  const Spectrum spec = periodogram(ts);
  const std::size_t n_bands = 32;
  const std::size_t band = spec.psd.size() / n_bands;
  std::vector<double> means;
  for (std::size_t b = 0; b < n_bands; ++b) {
    double acc = 0.0;
    for (std::size_t i = b * band; i < (b + 1) * band; ++i) acc += spec.psd[i];
    means.push_back(acc / static_cast<double>(band));
  }
  const double grand = std::accumulate(means.begin(), means.end(), 0.0) / n_bands;
  const double peak = *std::max_element(means.begin(), means.end());
  CHECK(peak / grand <= 2.0);
}

TEST_CASE("welch peak and power on the 6 h tone") {
  const TimeSeries ts = sine_series(1.7, 24, 4096);
  WelchParams params;
  params.segment_len = 192;
  const Spectrum spec = welch_psd(ts, params);

  const std::size_t peak = std::distance(
      spec.psd.begin(), std::max_element(spec.psd.begin(), spec.psd.end()));
  const double df = spec.frequencies[0];
  CHECK(std::fabs(spec.frequencies[peak] - 1.0 / 6.0) <= df + 1e-12);
  CHECK(psd_integral(spec) ==
        doctest::Approx(population_variance(ts.values)).epsilon(0.05));
  CHECK(spec.n_segments > 2);
  CHECK_FALSE(spec.single_segment_fallback);
}

TEST_CASE("welch smooths the white noise estimate") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TimeSeries ts = white_series(8192, seed);
    const Spectrum rough = periodogram(ts);
    WelchParams params;
    params.segment_len = 512;
    const Spectrum smooth = welch_psd(ts, params);
    CHECK(variance_across_bins(smooth.psd) < variance_across_bins(rough.psd));
  }
}

TEST_CASE("single full-length rectangular segment degenerates to the periodogram") {
  const TimeSeries ts = white_series(2048, 5);
  WelchParams params;
  params.segment_len = ts.values.size();
  params.overlap_fraction = 0.0;
  params.window = WindowKind::rectangular;
  const Spectrum welch = welch_psd(ts, params);
  const Spectrum plain = periodogram(ts);
  REQUIRE(welch.psd.size() == plain.psd.size());
  for (std::size_t i = 0; i < welch.psd.size(); ++i) {
    CHECK(std::fabs(welch.psd[i] - plain.psd[i]) <= 1e-9 * std::max(1e-300, plain.psd[i]));
  }
  CHECK(welch.single_segment_fallback);
  CHECK(welch.n_segments == 1);
}

TEST_CASE("spectral error paths") {
  const TimeSeries ts = white_series(64, 1);
  WelchParams params;
  params.segment_len = 65;
  CHECK_THROWS_AS(welch_psd(ts, params), config_error);
  params.segment_len = 32;
  params.overlap_fraction = 1.0;
  CHECK_THROWS_AS(welch_psd(ts, params), config_error);

  TimeSeries constant;
  constant.dt_hours = 0.25;
  constant.values.assign(64, 3.0);
  CHECK_THROWS_AS(periodogram(constant), data_error);
  CHECK_THROWS_AS(welch_psd(constant, {}), data_error);

  TimeSeries tiny;
  tiny.dt_hours = 0.25;
  tiny.values = {1.0, 2.0};
  CHECK_THROWS_AS(periodogram(tiny), data_error);
}

TEST_CASE("period flagging uses half the scenario duration, strictly") {
  Spectrum spec;
  spec.dt_hours = 0.25;
  spec.frequencies = {1.0 / 24.0, 1.0 / 12.0, 1.0 / 6.0};
  spec.periods = {24.0, 12.0, 6.0};
  spec.psd = {1.0, 1.0, 1.0};
  spec.flagged = {false, false, false};

  const Spectrum flagged = flag_periods(spec, 96, 0.25);  // bound: 12 h
  CHECK(flagged.flagged == std::vector<bool>{true, false, false});

  const Spectrum unflagged = flag_periods(spec, 0, 0.25);
  CHECK(unflagged.flagged == std::vector<bool>{false, false, false});
}

TEST_CASE("psd is a power-two homogeneous, mean-invariant statistic") {
  const TimeSeries ts = white_series(4096, 3);
  const Spectrum base = periodogram(ts);

  TimeSeries scaled = ts;
  for (double& v : scaled.values) v *= -2.5;
  const Spectrum spec_scaled = periodogram(scaled);
  for (std::size_t i = 0; i < base.psd.size(); ++i) {
    CHECK(std::fabs(spec_scaled.psd[i] - 6.25 * base.psd[i]) <= 1e-9 * 6.25 * base.psd[i]);
  }

  TimeSeries shifted = ts;
  for (double& v : shifted.values) v += 42.0;
  const Spectrum spec_shifted = periodogram(shifted);
  double scale = *std::max_element(base.psd.begin(), base.psd.end());
  for (std::size_t i = 0; i < base.psd.size(); ++i) {
    CHECK(std::fabs(spec_shifted.psd[i] - base.psd[i]) <= 1e-9 * scale);
  }
}

TEST_CASE("psd_report restricts to the scenario-supported period range") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ar1;
  spec.phi = 0.7;
  spec.seed = 301;
  spec.n = 96 * 128;
  const auto reference = as_scenario_set(generate(spec), 96).set;
  spec.seed = 302;
  const auto candidate = as_scenario_set(generate(spec), 96).set;

  const PsdReport report = psd_report(reference, candidate);
  REQUIRE(!report.reference.periods.empty());
  CHECK(report.reference.frequencies == report.candidate.frequencies);

  const auto [lo, hi] = std::minmax_element(report.reference.periods.begin(),
                                            report.reference.periods.end());
  CHECK(*lo >= 0.5 - 1e-12);   // Nyquist period: 2 dt = 30 min
  CHECK(*lo <= 0.5 + 1e-12);   // ... and it is actually reported
  CHECK(*hi <= 24.0 + 1e-9);   // nothing beyond the scenario length
  CHECK(*hi >= 24.0 - 1e-9);
  for (std::size_t i = 0; i < report.reference.periods.size(); ++i) {
    CHECK(report.reference.flagged[i] == (report.reference.periods[i] > 12.0));
  }
}

TEST_CASE("psd_report on identical sets and on noisier candidates") {
  const auto reference = as_scenario_set(white_series(96 * 64, 41), 96).set;

  SUBCASE("identical inputs give identical spectra") {
    const PsdReport report = psd_report(reference, reference);
    CHECK(report.reference.psd == report.candidate.psd);
  }

  SUBCASE("added independent noise never lowers the high-frequency floor") {
    ScenarioSet noisy = reference;
    const TimeSeries extra = white_series(noisy.values.size(), 42);
    for (std::size_t i = 0; i < noisy.values.size(); ++i) {
      noisy.values[i] += 0.5 * extra.values[i];
    }
    const PsdReport report = psd_report(reference, noisy);
    const std::size_t half = report.reference.psd.size() / 2;
    for (std::size_t i = half; i < report.reference.psd.size(); ++i) {
      CHECK(report.candidate.psd[i] >= report.reference.psd[i] * 0.75);
    }
  }

  SUBCASE("mismatched sampling intervals are rejected") {
    ScenarioSet other = reference;
    other.dt_hours = 1.0;
    CHECK_THROWS_AS(psd_report(reference, other), data_error);
  }
}
