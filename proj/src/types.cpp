#include "scenval/types.hpp"

#include <cmath>

namespace scenval {

ScenarioSet make_scenario_set(std::vector<double> values, std::size_t n_steps,
                              double dt_hours, std::string label) {
  if (n_steps < 2) throw data_error("scenario set needs at least 2 time steps per scenario");
  if (values.empty() || values.size() % n_steps != 0) {
    throw data_error("scenario set values must form a non-empty S x T matrix");
  }
  if (!(dt_hours > 0.0)) throw data_error("sampling interval must be positive");
  ScenarioSet set;
  set.n_scenarios = values.size() / n_steps;
  set.n_steps = n_steps;
  set.values = std::move(values);
  set.dt_hours = dt_hours;
  set.label = std::move(label);
  return set;
}

void validate(const ScenarioSet& set) {
  if (set.n_scenarios < 1 || set.n_steps < 2) {
    throw data_error("scenario set must hold at least one scenario of length >= 2");
  }
  if (set.values.size() != set.n_scenarios * set.n_steps) {
    throw data_error("scenario set storage does not match its S x T shape");
  }
  if (!(set.dt_hours > 0.0)) throw data_error("sampling interval must be positive");
  for (std::size_t i = 0; i < set.values.size(); ++i) {
    if (!std::isfinite(set.values[i])) {
      throw data_error("scenario set contains a non-finite value at flat index " +
                       std::to_string(i) + " (clean it first)");
    }
  }
}

TimeSeries concatenate(const ScenarioSet& set) {
  validate(set);
  TimeSeries ts;
  ts.values = set.values;  // row-major storage is already the chronological order
  ts.dt_hours = set.dt_hours;
  ts.scenario_len = set.n_steps;
  return ts;
}

SampleCollection flatten_timesteps(const ScenarioSet& set) {
  validate(set);
  return {set.values, SampleProvenance::all_timesteps};
}

SampleCollection daily_means(const ScenarioSet& set) {
  validate(set);
  SampleCollection out;
  out.provenance = SampleProvenance::daily_means;
  out.values.reserve(set.n_scenarios);
  for (std::size_t s = 0; s < set.n_scenarios; ++s) {
    double sum = 0.0;
    for (double v : set.scenario(s)) sum += v;
    out.values.push_back(sum / static_cast<double>(set.n_steps));
  }
  return out;
}

}  // namespace scenval
