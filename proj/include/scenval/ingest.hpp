#pragma once

#include <optional>
#include <string>

#include "scenval/types.hpp"

namespace scenval {

/// Rules for dropping faulty scenarios. With drop_if_missing off, a missing
/// value is an error instead of a silent drop; retained scenarios are fully
/// finite either way.
struct CleaningPolicy {
  bool drop_if_missing = true;
  std::optional<double> plausible_min;
  std::optional<double> plausible_max;
};

struct CleaningResult {
  ScenarioSet set;
  std::size_t dropped_count = 0;
};

/// Parameters of the affine map applied by affine_rescale; enough to undo it.
struct AffineInverse {
  double source_min = 0.0;
  double source_max = 0.0;
  double target_lo = 0.0;
  double target_hi = 0.0;

  double invert(double y) const {
    return source_min + (y - target_lo) * (source_max - source_min) / (target_hi - target_lo);
  }
};

struct RescaleResult {
  ScenarioSet set;
  AffineInverse inverse;
};

/// Load a wide-format CSV: one scenario per row, comma separated, '.' decimal
/// separator, optional header row (detected when the first row is not fully
/// numeric). Empty cells and "nan" (any case) become NaN missing markers.
ScenarioSet load_scenario_csv(const std::string& path, double dt_hours);

/// Drop scenarios with missing values and/or values outside plausibility
/// bounds. Throws data_error if nothing survives.
CleaningResult clean_scenarios(const ScenarioSet& set, const CleaningPolicy& policy);

/// Divide each sample by the installed capacity: `capacity` has either length
/// T (reused for every scenario) or length S*T (one value per sample).
ScenarioSet capacity_factor_scale(const ScenarioSet& set, const std::vector<double>& capacity);

/// Map the set's global [min, max] linearly onto [target_lo, target_hi].
RescaleResult affine_rescale(const ScenarioSet& set, double target_lo, double target_hi);

}  // namespace scenval
