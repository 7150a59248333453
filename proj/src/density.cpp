#include "scenval/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace scenval {

namespace {

constexpr double kInvSqrtTwoPi = 0.3989422804014326779;

void check_samples(const SampleCollection& samples) {
  if (samples.values.empty()) throw data_error("density: empty sample collection");
  for (double v : samples.values) {
    if (!std::isfinite(v)) throw data_error("density: samples must be finite");
  }
}

double sample_stddev(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / (n - 1.0));
}

}  // namespace

double default_bandwidth(const SampleCollection& samples) {
  check_samples(samples);
  if (samples.values.size() < 2) {
    throw data_error("default_bandwidth: needs at least 2 samples");
  }
  const double sd = sample_stddev(samples.values);
  if (!(sd > 0.0)) {
    throw data_error("default_bandwidth: zero sample spread, pass an explicit bandwidth");
  }
  return sd * std::pow(static_cast<double>(samples.values.size()), -0.2);
}

DensityEstimate kde_pdf(const SampleCollection& samples, std::optional<double> bandwidth,
                        const GridSpec& grid) {
  check_samples(samples);
  if (bandwidth && !(*bandwidth > 0.0)) {
    throw config_error("kde_pdf: explicit bandwidth must be positive");
  }
  if (grid.n_points < 2) throw config_error("kde_pdf: grid needs at least 2 points");

  DensityEstimate est;
  est.n_samples = samples.values.size();
  est.bandwidth = bandwidth ? *bandwidth : default_bandwidth(samples);

  const auto [min_it, max_it] = std::minmax_element(samples.values.begin(), samples.values.end());
  const double lo = grid.lo.value_or(*min_it - 3.0 * est.bandwidth);
  const double hi = grid.hi.value_or(*max_it + 3.0 * est.bandwidth);
  if (!(hi > lo)) throw config_error("kde_pdf: grid upper bound must exceed lower bound");

  est.grid.resize(grid.n_points);
  est.density.resize(grid.n_points);
  const double step = (hi - lo) / static_cast<double>(grid.n_points - 1);
  for (std::size_t g = 0; g < grid.n_points; ++g) {
    est.grid[g] = lo + step * static_cast<double>(g);
  }

  const double inv_h = 1.0 / est.bandwidth;
  const double norm =
      kInvSqrtTwoPi * inv_h / static_cast<double>(est.n_samples);
  for (std::size_t g = 0; g < grid.n_points; ++g) {
    const double x = est.grid[g];
    double acc = 0.0;
    for (double xi : samples.values) {
      const double u = (x - xi) * inv_h;
      acc += std::exp(-0.5 * u * u);
    }
    est.density[g] = norm * acc;
  }
  return est;
}

std::vector<double> log_density(const DensityEstimate& est, double floor) {
  if (!(floor > 0.0)) throw config_error("log_density: floor must be positive");
  std::vector<double> out(est.density.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::log10(std::max(est.density[i], floor));
  }
  return out;
}

PdfReport pdf_report(const ScenarioSet& reference, const ScenarioSet& candidate,
                     std::optional<double> bandwidth, std::size_t grid_points) {
  validate(reference);
  validate(candidate);

  const auto shared_grid = [&](const SampleCollection& a, const SampleCollection& b) {
    const double ha = bandwidth ? *bandwidth : default_bandwidth(a);
    const double hb = bandwidth ? *bandwidth : default_bandwidth(b);
    const auto [amin, amax] = std::minmax_element(a.values.begin(), a.values.end());
    const auto [bmin, bmax] = std::minmax_element(b.values.begin(), b.values.end());
    GridSpec grid;
    grid.n_points = grid_points;
    grid.lo = std::min(*amin - 3.0 * ha, *bmin - 3.0 * hb);
    grid.hi = std::max(*amax + 3.0 * ha, *bmax + 3.0 * hb);
    return grid;
  };

  PdfReport report;
  {
    const auto ref = flatten_timesteps(reference);
    const auto cand = flatten_timesteps(candidate);
    const GridSpec grid = shared_grid(ref, cand);
    report.reference_full = kde_pdf(ref, bandwidth, grid);
    report.candidate_full = kde_pdf(cand, bandwidth, grid);
  }
  {
    const auto ref = daily_means(reference);
    const auto cand = daily_means(candidate);
    const GridSpec grid = shared_grid(ref, cand);
    report.reference_marginal = kde_pdf(ref, bandwidth, grid);
    report.candidate_marginal = kde_pdf(cand, bandwidth, grid);
  }
  return report;
}

}  // namespace scenval
