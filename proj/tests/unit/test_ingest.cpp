#include <doctest.h>

#include <cmath>

#include "scenval/ingest.hpp"
#include "test_util.hpp"

using namespace scenval;
using testutil::TempFile;

TEST_CASE("csv: plain numeric rows load as scenarios") {
  TempFile f("1.0,2.0\n3.0,4.0\n");
  const ScenarioSet set = load_scenario_csv(f.path(), 0.25);
  CHECK(set.n_scenarios == 2);
  CHECK(set.n_steps == 2);
  CHECK(set.values == std::vector<double>{1, 2, 3, 4});
  CHECK(set.dt_hours == 0.25);
}

TEST_CASE("csv: non-numeric first row is a header") {
  TempFile f("t0,t1\n1.5,2.5\n");
  const ScenarioSet set = load_scenario_csv(f.path(), 0.25);
  CHECK(set.n_scenarios == 1);
  CHECK(set.values == std::vector<double>{1.5, 2.5});
}

TEST_CASE("csv: empty and nan cells become missing markers") {
  TempFile f("1.0,,3.0\n1.0,nan,3.0\n1.0,NaN,3.0\n1.0,2.0,3.0\n");
  const ScenarioSet set = load_scenario_csv(f.path(), 0.25);
  REQUIRE(set.n_scenarios == 4);
  CHECK(std::isnan(set.at(0, 1)));
  CHECK(std::isnan(set.at(1, 1)));
  CHECK(std::isnan(set.at(2, 1)));
  CHECK(set.at(3, 1) == 2.0);
}

TEST_CASE("csv: CRLF line endings are accepted") {
  TempFile f("1.0,2.0\r\n3.0,4.0\r\n");
  CHECK(load_scenario_csv(f.path(), 0.25).values == std::vector<double>{1, 2, 3, 4});
}

TEST_CASE("csv: errors name the offending row and column") {
  TempFile ragged("1.0,2.0\n3.0\n");
  CHECK_THROWS_WITH_AS(load_scenario_csv(ragged.path(), 0.25),
                       doctest::Contains("row 2"), data_error);

  TempFile bad("1.0,2.0\n3.0,abc\n");
  CHECK_THROWS_WITH_AS(load_scenario_csv(bad.path(), 0.25),
                       doctest::Contains("column 2"), data_error);

  CHECK_THROWS_AS(load_scenario_csv("/nonexistent/file.csv", 0.25), data_error);
  TempFile narrow("1.0\n2.0\n");
  CHECK_THROWS_AS(load_scenario_csv(narrow.path(), 0.25), data_error);
}

TEST_CASE("cleaning drops scenarios with missing values") {
  TempFile f("1.0,2.0\n1.0,\n3.0,4.0\n");
  const ScenarioSet raw = load_scenario_csv(f.path(), 0.25);
  const CleaningResult cleaned = clean_scenarios(raw, {});
  CHECK(cleaned.set.n_scenarios == 2);
  CHECK(cleaned.dropped_count == 1);
  CHECK(cleaned.set.values == std::vector<double>{1, 2, 3, 4});
}

TEST_CASE("cleaning drops scenarios outside plausibility bounds") {
  const ScenarioSet set = make_scenario_set({0.2, 0.4, 0.9, 1.7}, 2, 0.25);
  CleaningPolicy policy;
  policy.plausible_min = 0.0;
  policy.plausible_max = 1.0;
  const CleaningResult cleaned = clean_scenarios(set, policy);
  CHECK(cleaned.set.n_scenarios == 1);
  CHECK(cleaned.dropped_count == 1);
  CHECK(cleaned.set.values == std::vector<double>{0.2, 0.4});
}

TEST_CASE("cleaning a clean set changes nothing and is idempotent") {
  const ScenarioSet set = testutil::random_set(9, 5, 11);
  CleaningPolicy policy;
  policy.plausible_min = -1.0;
  policy.plausible_max = 2.0;
  const CleaningResult once = clean_scenarios(set, policy);
  CHECK(once.dropped_count == 0);
  CHECK(once.set.values == set.values);
  const CleaningResult twice = clean_scenarios(once.set, policy);
  CHECK(twice.dropped_count == 0);
  CHECK(twice.set.values == set.values);
}

TEST_CASE("cleaning errors") {
  TempFile f("1.0,\n2.0,\n");
  const ScenarioSet raw = load_scenario_csv(f.path(), 0.25);
  CHECK_THROWS_AS(clean_scenarios(raw, {}), data_error);  // everything dropped

  CleaningPolicy strict;
  strict.drop_if_missing = false;
  CHECK_THROWS_AS(clean_scenarios(raw, strict), data_error);

  CleaningPolicy inverted;
  inverted.plausible_min = 1.0;
  inverted.plausible_max = 0.0;
  CHECK_THROWS_AS(clean_scenarios(testutil::random_set(2, 3, 1), inverted), config_error);
}

TEST_CASE("capacity factor scaling divides elementwise") {
  const ScenarioSet set = make_scenario_set({10, 20}, 2, 0.25);
  CHECK(capacity_factor_scale(set, {100, 100}).values == std::vector<double>{0.1, 0.2});
  CHECK(capacity_factor_scale(set, {10, 20}).values == std::vector<double>{1, 1});

  const ScenarioSet two = make_scenario_set({10, 20, 30, 40}, 2, 0.25);
  const ScenarioSet per_step = capacity_factor_scale(two, {10, 20});
  CHECK(per_step.values == std::vector<double>{1, 1, 3, 2});
  const ScenarioSet per_sample = capacity_factor_scale(two, {10, 20, 30, 40});
  CHECK(per_sample.values == std::vector<double>{1, 1, 1, 1});

  CHECK_THROWS_AS(capacity_factor_scale(set, {0.0, 100}), data_error);
  CHECK_THROWS_AS(capacity_factor_scale(set, {1, 2, 3}), data_error);
}

TEST_CASE("capacity factors stay in [0,1] when generation never exceeds capacity") {
  const std::vector<double> gen = testutil::uniform_values(96, 3, 0.0, 50.0);
  std::vector<double> capacity(96);
  for (std::size_t i = 0; i < 96; ++i) capacity[i] = 50.0 + 10.0 * (i % 7);
  const ScenarioSet set = make_scenario_set(gen, 96, 0.25);
  for (double v : capacity_factor_scale(set, capacity).values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("affine rescaling maps the global range onto the target") {
  const ScenarioSet set = make_scenario_set({0, 5, 10, 5}, 2, 0.25);

  const RescaleResult unit = affine_rescale(set, 0.0, 1.0);
  CHECK(unit.set.values == std::vector<double>{0, 0.5, 1, 0.5});

  const RescaleResult sym = affine_rescale(set, -1.0, 1.0);
  CHECK(sym.set.values == std::vector<double>{-1, 0, 1, 0});
}

TEST_CASE("affine rescaling inverts exactly and preserves ordering") {
  const ScenarioSet set =
      make_scenario_set(testutil::uniform_values(6 * 16, 21, -3.0, 7.0), 16, 0.25);
  const RescaleResult r = affine_rescale(set, -1.0, 1.0);
  const double span = 10.0;
  for (std::size_t i = 0; i < set.values.size(); ++i) {
    CHECK(std::fabs(r.inverse.invert(r.set.values[i]) - set.values[i]) <= 1e-12 * span);
  }
  for (std::size_t i = 0; i + 1 < set.values.size(); ++i) {
    if (set.values[i] < set.values[i + 1]) CHECK(r.set.values[i] < r.set.values[i + 1]);
    if (set.values[i] > set.values[i + 1]) CHECK(r.set.values[i] > r.set.values[i + 1]);
  }

  CHECK_THROWS_AS(affine_rescale(make_scenario_set({2, 2, 2, 2}, 2, 0.25), 0.0, 1.0),
                  data_error);
  CHECK_THROWS_AS(affine_rescale(set, 1.0, -1.0), config_error);
}
