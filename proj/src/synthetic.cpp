#include "scenval/synthetic.hpp"

#include <cmath>
#include <numbers>

namespace scenval {

namespace {

constexpr double kTwoPow53 = 9007199254740992.0;  // 2^53

void check_spec(const GeneratorSpec& spec) {
  if (spec.n < 2) throw config_error("generator spec: n must be >= 2");
  if (!(spec.dt_hours > 0.0)) throw config_error("generator spec: dt_hours must be positive");
  if (spec.kind == GeneratorKind::ar1 && !(std::fabs(spec.phi) < 1.0)) {
    throw config_error("generator spec: ar1 requires |phi| < 1");
  }
  if (spec.kind == GeneratorKind::sine && spec.period_steps < 2) {
    throw config_error("generator spec: sine requires period_steps >= 2");
  }
  if (spec.kind == GeneratorKind::quantized_copy) {
    if (spec.decimals < 0) throw config_error("generator spec: decimals must be >= 0");
    if (spec.base_kind == GeneratorKind::quantized_copy) {
      throw config_error("generator spec: quantized_copy cannot quantize itself");
    }
  }
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
    throw config_error("generator spec: sigma must be finite and non-negative");
  }
}

TimeSeries white_gaussian(const GeneratorSpec& spec) {
  GaussianStream z(spec.seed);
  TimeSeries ts;
  ts.dt_hours = spec.dt_hours;
  ts.values.resize(spec.n);
  for (double& v : ts.values) v = spec.sigma * z.next();
  return ts;
}

TimeSeries ar1(const GeneratorSpec& spec) {
  GaussianStream z(spec.seed);
  TimeSeries ts;
  ts.dt_hours = spec.dt_hours;
  ts.values.resize(spec.n);
  // Stationary start: x_0 ~ N(0, sigma^2 / (1 - phi^2)). One normal draw per
  // sample, so phi = 0 replays the white_gaussian path exactly.
  ts.values[0] = spec.sigma / std::sqrt(1.0 - spec.phi * spec.phi) * z.next();
  for (std::size_t i = 1; i < spec.n; ++i) {
    ts.values[i] = spec.phi * ts.values[i - 1] + spec.sigma * z.next();
  }
  return ts;
}

TimeSeries sine(const GeneratorSpec& spec) {
  TimeSeries ts;
  ts.dt_hours = spec.dt_hours;
  ts.values.resize(spec.n);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(spec.period_steps);
  for (std::size_t t = 0; t < spec.n; ++t) {
    ts.values[t] = spec.amplitude * std::sin(w * static_cast<double>(t));
  }
  return ts;
}

TimeSeries random_walk(const GeneratorSpec& spec) {
  TimeSeries ts = white_gaussian(spec);
  for (std::size_t i = 1; i < ts.values.size(); ++i) ts.values[i] += ts.values[i - 1];
  return ts;
}

}  // namespace

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 =
      (static_cast<double>(rng_() >> 11) + 1.0) / kTwoPow53;          // (0, 1]
  const double u2 = static_cast<double>(rng_() >> 11) / kTwoPow53;    // [0, 1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

TimeSeries generate(const GeneratorSpec& spec) {
  check_spec(spec);
  switch (spec.kind) {
    case GeneratorKind::white_gaussian:
      return white_gaussian(spec);
    case GeneratorKind::ar1:
      return ar1(spec);
    case GeneratorKind::sine:
      return sine(spec);
    case GeneratorKind::random_walk:
      return random_walk(spec);
    case GeneratorKind::quantized_copy: {
      GeneratorSpec base = spec;
      base.kind = spec.base_kind;
      return quantize_half_even(generate(base), spec.decimals);
    }
  }
  throw config_error("generator spec: unknown kind");
}

TimeSeries quantize_half_even(const TimeSeries& ts, int decimals) {
  if (decimals < 0) throw config_error("quantize: decimals must be >= 0");
  TimeSeries out = ts;
  const double scale = std::pow(10.0, decimals);
  for (double& v : out.values) {
    const double x = v * scale;
    double r = std::nearbyint(x);  // default FE_TONEAREST rounds half to even
    v = r / scale;
  }
  return out;
}

ScenarioSplit as_scenario_set(const TimeSeries& ts, std::size_t scenario_len) {
  if (scenario_len < 2) throw data_error("as_scenario_set: scenario length must be >= 2");
  if (scenario_len > ts.values.size()) {
    throw data_error("as_scenario_set: scenario length exceeds the series length");
  }
  const std::size_t rows = ts.values.size() / scenario_len;
  ScenarioSplit split;
  split.truncated_samples = ts.values.size() - rows * scenario_len;
  std::vector<double> values(ts.values.begin(),
                             ts.values.begin() + static_cast<std::ptrdiff_t>(rows * scenario_len));
  split.set = make_scenario_set(std::move(values), scenario_len, ts.dt_hours);
  return split;
}

}  // namespace scenval
