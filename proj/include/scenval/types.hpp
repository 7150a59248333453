#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scenval {

/// Raised for malformed configuration (bad parameters, empty validator set, ...).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for defective input data (unreadable files, ragged rows, degenerate
/// series, ...).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A set of S equally long scenarios sampled at a fixed interval.
///
/// Rows are stored row-major in `values` (S x T). Freshly loaded sets may
/// carry NaN as a missing-value marker; `clean_scenarios` removes those rows
/// and every analysis entry point rejects non-finite input.
struct ScenarioSet {
  std::vector<double> values;   // row-major, n_scenarios x n_steps
  std::size_t n_scenarios = 0;  // S
  std::size_t n_steps = 0;      // T
  double dt_hours = 0.0;        // sampling interval
  std::string label;

  std::span<const double> scenario(std::size_t s) const {
    return {values.data() + s * n_steps, n_steps};
  }
  double at(std::size_t s, std::size_t t) const { return values[s * n_steps + t]; }
};

/// One flat series. `scenario_len` records the row length of the source set
/// when the series came from concatenating scenarios (0 otherwise); period
/// and segment-length flagging rules read it.
struct TimeSeries {
  std::vector<double> values;
  double dt_hours = 0.0;
  std::size_t scenario_len = 0;
};

enum class SampleProvenance { all_timesteps, daily_means };

/// Unordered samples feeding a density estimate.
struct SampleCollection {
  std::vector<double> values;
  SampleProvenance provenance = SampleProvenance::all_timesteps;
};

ScenarioSet make_scenario_set(std::vector<double> values, std::size_t n_steps,
                              double dt_hours, std::string label = {});

/// Throws data_error unless the set satisfies every invariant (shape, finite
/// values, positive dt).
void validate(const ScenarioSet& set);

TimeSeries concatenate(const ScenarioSet& set);
SampleCollection flatten_timesteps(const ScenarioSet& set);
SampleCollection daily_means(const ScenarioSet& set);

}  // namespace scenval
