#pragma once

#include <optional>

#include "scenval/types.hpp"

namespace scenval {

enum class Kernel { gaussian };

/// Evaluation grid for a density estimate. Without explicit bounds the grid
/// spans [min - 3h, max + 3h] of the samples, which keeps the trapezoidal
/// integral of the estimate within [0.99, 1.01].
struct GridSpec {
  std::size_t n_points = 512;
  std::optional<double> lo;
  std::optional<double> hi;
};

struct DensityEstimate {
  std::vector<double> grid;     // strictly ascending
  std::vector<double> density;  // >= 0
  double bandwidth = 0.0;
  std::size_t n_samples = 0;
  Kernel kernel = Kernel::gaussian;
};

/// Scott's rule: sample standard deviation (divisor N-1) times N^(-1/5).
double default_bandwidth(const SampleCollection& samples);

/// Gaussian kernel density estimate over the grid. Without an explicit
/// bandwidth the samples must have positive spread so Scott's rule applies.
DensityEstimate kde_pdf(const SampleCollection& samples,
                        std::optional<double> bandwidth = std::nullopt,
                        const GridSpec& grid = {});

/// log10 of the density with values below `floor` clamped to it.
std::vector<double> log_density(const DensityEstimate& est, double floor = 1e-12);

/// Full-distribution and daily-mean estimates for both sets. Each pair shares
/// one grid (union of both spans) so the curves are directly comparable;
/// bandwidths stay per-estimate.
struct PdfReport {
  DensityEstimate reference_full;
  DensityEstimate candidate_full;
  DensityEstimate reference_marginal;
  DensityEstimate candidate_marginal;
};

PdfReport pdf_report(const ScenarioSet& reference, const ScenarioSet& candidate,
                     std::optional<double> bandwidth = std::nullopt,
                     std::size_t grid_points = 512);

}  // namespace scenval
