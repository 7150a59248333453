#pragma once

#include <cstdint>
#include <random>

#include "scenval/types.hpp"

namespace scenval {

/// Deterministic standard-normal stream: mt19937_64 with the Box-Muller
/// transform spelled out here so the same seed yields the same values on
/// every platform (std::normal_distribution is implementation-defined and
/// deliberately avoided).
///
/// Draws two 64-bit words per pair: u1 = (w1 >> 11 + 1) * 2^-53 in (0,1],
/// u2 = (w2 >> 11) * 2^-53 in [0,1), then
///   z0 = sqrt(-2 ln u1) * cos(2 pi u2),  z1 = sqrt(-2 ln u1) * sin(2 pi u2).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next();

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

enum class GeneratorKind { white_gaussian, ar1, sine, random_walk, quantized_copy };

/// Recipe for a synthetic series with a known analytic signature.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::white_gaussian;
  double sigma = 1.0;             // white_gaussian, ar1, random_walk
  double phi = 0.0;               // ar1, |phi| < 1
  double amplitude = 1.0;         // sine
  std::size_t period_steps = 24;  // sine, >= 2
  int decimals = 2;               // quantized_copy, >= 0
  GeneratorKind base_kind = GeneratorKind::white_gaussian;  // quantized_copy source
  std::uint64_t seed = 0;
  std::size_t n = 0;  // >= 2
  double dt_hours = 0.25;
};

TimeSeries generate(const GeneratorSpec& spec);

/// Round every sample half-to-even at the given number of decimals.
TimeSeries quantize_half_even(const TimeSeries& ts, int decimals);

struct ScenarioSplit {
  ScenarioSet set;
  std::size_t truncated_samples = 0;  // tail samples dropped when N % T != 0
};

/// Cut a series into consecutive scenarios of the given length.
ScenarioSplit as_scenario_set(const TimeSeries& ts, std::size_t scenario_len);

}  // namespace scenval
