#include <doctest.h>

#include <algorithm>

#include "scenval/synthetic.hpp"
#include "scenval/types.hpp"
#include "test_util.hpp"

using namespace scenval;

TEST_CASE("concatenate joins rows in chronological order") {
  const ScenarioSet set = make_scenario_set({1, 2, 3, 4}, 2, 0.25);
  const TimeSeries ts = concatenate(set);
  CHECK(ts.values == std::vector<double>{1, 2, 3, 4});
  CHECK(ts.scenario_len == 2);
  CHECK(ts.dt_hours == 0.25);
}

TEST_CASE("concatenate of a single scenario is the identity") {
  const ScenarioSet set = make_scenario_set({5, 6, 7}, 3, 1.0);
  CHECK(concatenate(set).values == std::vector<double>{5, 6, 7});
}

TEST_CASE("concatenating a year of scenarios yields S*T samples") {
  const ScenarioSet set = testutil::random_set(365, 96, 1);
  CHECK(concatenate(set).values.size() == 35040);
}

TEST_CASE("concatenate then reshape reproduces the matrix bit-exactly") {
  const ScenarioSet set = testutil::random_set(17, 96, 2);
  const TimeSeries ts = concatenate(set);
  const auto split = as_scenario_set(ts, ts.scenario_len);
  CHECK(split.truncated_samples == 0);
  CHECK(split.set.values == set.values);
  CHECK(split.set.n_scenarios == set.n_scenarios);
}

TEST_CASE("flatten_timesteps returns every sample") {
  const ScenarioSet set = make_scenario_set({1, 2, 3, 4}, 2, 0.25);
  const SampleCollection flat = flatten_timesteps(set);
  CHECK(flat.provenance == SampleProvenance::all_timesteps);
  std::vector<double> sorted = flat.values;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<double>{1, 2, 3, 4});

  const ScenarioSet one = make_scenario_set({9, 8}, 2, 0.25);
  CHECK(flatten_timesteps(one).values == std::vector<double>{9, 8});

  CHECK(flatten_timesteps(testutil::random_set(365, 96, 3)).values.size() == 35040);
}

TEST_CASE("flatten_timesteps preserves the multiset of entries") {
  const ScenarioSet set = testutil::random_set(11, 7, 4);
  std::vector<double> a = flatten_timesteps(set).values;
  std::vector<double> b = set.values;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("daily_means averages each scenario") {
  CHECK(daily_means(make_scenario_set({1, 2, 3, 4}, 4, 0.25)).values ==
        std::vector<double>{2.5});
  CHECK(daily_means(make_scenario_set({0.3, 0.3, 0.3}, 3, 0.25)).values ==
        std::vector<double>{0.3});

  const SampleCollection means = daily_means(make_scenario_set({0, 1, 1, 0}, 2, 0.25));
  CHECK(means.provenance == SampleProvenance::daily_means);
  CHECK(means.values == std::vector<double>{0.5, 0.5});
}

TEST_CASE("daily means stay inside each scenario's range") {
  const ScenarioSet set = testutil::random_set(40, 24, 5);
  const auto means = daily_means(set);
  REQUIRE(means.values.size() == set.n_scenarios);
  for (std::size_t s = 0; s < set.n_scenarios; ++s) {
    const auto row = set.scenario(s);
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    CHECK(means.values[s] >= *lo);
    CHECK(means.values[s] <= *hi);
  }
}

TEST_CASE("scenario set invariants are enforced") {
  CHECK_THROWS_AS(make_scenario_set({}, 2, 0.25), data_error);
  CHECK_THROWS_AS(make_scenario_set({1, 2, 3}, 2, 0.25), data_error);  // ragged
  CHECK_THROWS_AS(make_scenario_set({1, 2}, 1, 0.25), data_error);     // T < 2
  CHECK_THROWS_AS(make_scenario_set({1, 2}, 2, 0.0), data_error);      // dt <= 0

  ScenarioSet set = make_scenario_set({1, 2, 3, 4}, 2, 0.25);
  set.values[1] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(set), data_error);
  CHECK_THROWS_AS(concatenate(set), data_error);
}
