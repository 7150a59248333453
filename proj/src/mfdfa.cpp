#include "scenval/mfdfa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scenval {

namespace {

void check_config(const MfdfaConfig& cfg) {
  if (cfg.q_values.empty()) throw config_error("mfdfa: q_values must not be empty");
  for (double q : cfg.q_values) {
    if (q == 0.0 || !std::isfinite(q)) {
      throw config_error("mfdfa: q values must be finite and nonzero");
    }
  }
  if (cfg.detrend_order < 1) throw config_error("mfdfa: detrend_order must be >= 1");
  if (!(cfg.variance_floor > 0.0)) throw config_error("mfdfa: variance_floor must be positive");
  const std::size_t s_min = static_cast<std::size_t>(cfg.detrend_order) + 2;
  for (std::size_t i = 0; i < cfg.s_values.size(); ++i) {
    if (cfg.s_values[i] < s_min) {
      throw config_error("mfdfa: segment lengths must be >= detrend_order + 2");
    }
    if (i > 0 && cfg.s_values[i] <= cfg.s_values[i - 1]) {
      throw config_error("mfdfa: s_values must be strictly ascending");
    }
  }
}

std::vector<std::size_t> resolve_s_values(const MfdfaConfig& cfg, const TimeSeries& ts) {
  if (!cfg.s_values.empty()) return cfg.s_values;
  const std::size_t s_min = static_cast<std::size_t>(cfg.detrend_order) + 2;
  std::size_t s_max = ts.scenario_len >= s_min
                          ? ts.scenario_len
                          : std::min<std::size_t>(ts.values.size() / 4, 128);
  s_max = std::max(s_max, s_min);
  std::vector<std::size_t> out;
  for (std::size_t s = s_min; s <= s_max; ++s) out.push_back(s);
  return out;
}

// Least-squares fit of an order-m polynomial on fixed abscissae 0..s-1,
// shared by every segment of one length. Works on centered abscissae so the
// normal equations stay well conditioned; the fitted subspace is the same.
class PolynomialDetrender {
 public:
  PolynomialDetrender(std::size_t s, int order)
      : s_(s), n_coef_(static_cast<std::size_t>(order) + 1) {
    basis_.resize(n_coef_ * s_);
    const double center = 0.5 * static_cast<double>(s_ - 1);
    for (std::size_t i = 0; i < s_; ++i) {
      double p = 1.0;
      const double t = static_cast<double>(i) - center;
      for (std::size_t c = 0; c < n_coef_; ++c) {
        basis_[c * s_ + i] = p;
        p *= t;
      }
    }
    // Gram matrix and its Cholesky factor, computed once per segment length.
    std::vector<double> gram(n_coef_ * n_coef_, 0.0);
    for (std::size_t a = 0; a < n_coef_; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        double acc = 0.0;
        for (std::size_t i = 0; i < s_; ++i) acc += basis_[a * s_ + i] * basis_[b * s_ + i];
        gram[a * n_coef_ + b] = acc;
        gram[b * n_coef_ + a] = acc;
      }
    }
    chol_ = cholesky(gram);
  }

  // Mean squared residual of the fit over one segment.
  double residual_variance(const double* y) const {
    std::vector<double> rhs(n_coef_, 0.0);
    for (std::size_t c = 0; c < n_coef_; ++c) {
      double acc = 0.0;
      const double* row = basis_.data() + c * s_;
      for (std::size_t i = 0; i < s_; ++i) acc += row[i] * y[i];
      rhs[c] = acc;
    }
    solve_inplace(rhs);

    double ss = 0.0;
    for (std::size_t i = 0; i < s_; ++i) {
      double fit = 0.0;
      for (std::size_t c = 0; c < n_coef_; ++c) fit += rhs[c] * basis_[c * s_ + i];
      const double r = y[i] - fit;
      ss += r * r;
    }
    return ss / static_cast<double>(s_);
  }

 private:
  std::vector<double> cholesky(const std::vector<double>& gram) const {
    std::vector<double> l(n_coef_ * n_coef_, 0.0);
    for (std::size_t a = 0; a < n_coef_; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        double acc = gram[a * n_coef_ + b];
        for (std::size_t k = 0; k < b; ++k) acc -= l[a * n_coef_ + k] * l[b * n_coef_ + k];
        if (a == b) {
          if (!(acc > 0.0)) throw data_error("mfdfa: degenerate polynomial fit");
          l[a * n_coef_ + a] = std::sqrt(acc);
        } else {
          l[a * n_coef_ + b] = acc / l[b * n_coef_ + b];
        }
      }
    }
    return l;
  }

  void solve_inplace(std::vector<double>& rhs) const {
    for (std::size_t a = 0; a < n_coef_; ++a) {
      double acc = rhs[a];
      for (std::size_t k = 0; k < a; ++k) acc -= chol_[a * n_coef_ + k] * rhs[k];
      rhs[a] = acc / chol_[a * n_coef_ + a];
    }
    for (std::size_t a = n_coef_; a-- > 0;) {
      double acc = rhs[a];
      for (std::size_t k = a + 1; k < n_coef_; ++k) acc -= chol_[k * n_coef_ + a] * rhs[k];
      rhs[a] = acc / chol_[a * n_coef_ + a];
    }
  }

  std::size_t s_;
  std::size_t n_coef_;
  std::vector<double> basis_;  // row per coefficient, column per abscissa
  std::vector<double> chol_;
};

// Power mean of order q/2 over the clamped variances, evaluated through
// log-sum-exp so q = +-10 cannot overflow.
double q_norm(const std::vector<double>& log_variances, double q) {
  const double half_q = 0.5 * q;
  double peak = -std::numeric_limits<double>::infinity();
  for (double lv : log_variances) peak = std::max(peak, half_q * lv);
  double acc = 0.0;
  for (double lv : log_variances) acc += std::exp(half_q * lv - peak);
  const double log_mean = peak + std::log(acc) - std::log(static_cast<double>(log_variances.size()));
  return std::exp(log_mean / q);
}

}  // namespace

Profile profile(const TimeSeries& ts) {
  if (ts.values.size() < 2) throw data_error("profile: series needs at least 2 samples");
  double mean = 0.0;
  for (double v : ts.values) {
    if (!std::isfinite(v)) throw data_error("profile: series must be finite");
    mean += v;
  }
  mean /= static_cast<double>(ts.values.size());

  Profile p;
  p.values.resize(ts.values.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < ts.values.size(); ++i) {
    acc += ts.values[i] - mean;
    p.values[i] = acc;
  }
  return p;
}

std::vector<double> segment_variances(const Profile& p, std::size_t s, int detrend_order,
                                      SegmentationMode mode) {
  const std::size_t n = p.values.size();
  if (detrend_order < 1) throw config_error("segment_variances: detrend_order must be >= 1");
  if (s < static_cast<std::size_t>(detrend_order) + 2) {
    throw config_error("segment_variances: segment length must be >= detrend_order + 2");
  }
  if (s > n) throw data_error("segment_variances: segment length exceeds the profile");

  const PolynomialDetrender detrender(s, detrend_order);
  std::vector<double> out;
  if (mode == SegmentationMode::sliding) {
    out.reserve(n - s + 1);
    for (std::size_t a = 0; a + s <= n; ++a) {
      out.push_back(detrender.residual_variance(p.values.data() + a));
    }
  } else {
    const std::size_t n_segments = n / s;  // tail remainder discarded
    out.reserve(n_segments);
    for (std::size_t v = 0; v < n_segments; ++v) {
      out.push_back(detrender.residual_variance(p.values.data() + v * s));
    }
  }
  return out;
}

FluctuationSurface fluctuation_function(const TimeSeries& ts, const MfdfaConfig& cfg) {
  check_config(cfg);
  const auto s_values = resolve_s_values(cfg, ts);
  if (ts.values.size() < s_values.back()) {
    throw data_error("mfdfa: series shorter than the largest segment length");
  }

  FluctuationSurface surface;
  surface.s_values = s_values;
  surface.q_values = cfg.q_values;
  surface.scenario_len = ts.scenario_len;
  surface.fluctuation.assign(cfg.q_values.size() * s_values.size(), 0.0);
  surface.clamped_segments.assign(cfg.q_values.size() * s_values.size(), 0);
  surface.flagged_s.assign(s_values.size(), false);

  const Profile p = profile(ts);
  const double log_floor = std::log(cfg.variance_floor);

  for (std::size_t si = 0; si < s_values.size(); ++si) {
    const std::size_t s = s_values[si];
    if (ts.scenario_len >= 2) {
      surface.flagged_s[si] = 2 * s >= ts.scenario_len;  // s >= scenario_len / 2
    }

    const auto variances = segment_variances(p, s, cfg.detrend_order, cfg.mode);
    std::size_t clamped = 0;
    std::vector<double> log_variances(variances.size());
    for (std::size_t v = 0; v < variances.size(); ++v) {
      if (variances[v] < cfg.variance_floor) {
        log_variances[v] = log_floor;
        ++clamped;
      } else {
        log_variances[v] = std::log(variances[v]);
      }
    }

    for (std::size_t qi = 0; qi < cfg.q_values.size(); ++qi) {
      surface.fluctuation[qi * s_values.size() + si] = q_norm(log_variances, cfg.q_values[qi]);
      surface.clamped_segments[qi * s_values.size() + si] = clamped;
    }
  }
  return surface;
}

FluctuationSurface hurst_fit(FluctuationSurface surface,
                             std::optional<std::pair<std::size_t, std::size_t>> s_fit_range) {
  const std::size_t n_s = surface.s_values.size();
  std::vector<std::size_t> usable;
  for (std::size_t si = 0; si < n_s; ++si) {
    const std::size_t s = surface.s_values[si];
    if (surface.flagged_s[si]) continue;
    if (s_fit_range && (s < s_fit_range->first || s > s_fit_range->second)) continue;
    usable.push_back(si);
  }
  if (usable.size() < 3) {
    throw data_error("hurst_fit: needs at least 3 unflagged segment lengths in range");
  }

  surface.hurst.assign(surface.q_values.size(), {});
  std::vector<double> log_s(usable.size());
  for (std::size_t i = 0; i < usable.size(); ++i) {
    log_s[i] = std::log2(static_cast<double>(surface.s_values[usable[i]]));
  }
  const double n = static_cast<double>(usable.size());
  double sx = 0.0, sxx = 0.0;
  for (double x : log_s) {
    sx += x;
    sxx += x * x;
  }
  const double x_mean = sx / n;
  const double sxx_centered = sxx - n * x_mean * x_mean;

  for (std::size_t qi = 0; qi < surface.q_values.size(); ++qi) {
    double sy = 0.0, sxy = 0.0;
    std::vector<double> log_f(usable.size());
    for (std::size_t i = 0; i < usable.size(); ++i) {
      log_f[i] = std::log2(surface.at(qi, usable[i]));
      sy += log_f[i];
      sxy += log_s[i] * log_f[i];
    }
    const double y_mean = sy / n;
    const double slope = (sxy - n * x_mean * y_mean) / sxx_centered;
    const double intercept = y_mean - slope * x_mean;

    double ssr = 0.0;
    for (std::size_t i = 0; i < usable.size(); ++i) {
      const double r = log_f[i] - (intercept + slope * log_s[i]);
      ssr += r * r;
    }
    const double se = std::sqrt(ssr / ((n - 2.0) * sxx_centered));
    surface.hurst[qi] = {slope, se};
    if (!std::isfinite(slope)) throw data_error("hurst_fit: non-finite exponent");
  }
  return surface;
}

MfdfaReport mfdfa_report(const ScenarioSet& reference, const ScenarioSet& candidate,
                         const MfdfaConfig& cfg) {
  validate(reference);
  validate(candidate);
  if (reference.dt_hours != candidate.dt_hours) {
    throw data_error("mfdfa_report: reference and candidate sampling intervals differ");
  }

  MfdfaReport report;
  report.reference = hurst_fit(fluctuation_function(concatenate(reference), cfg));
  report.candidate = hurst_fit(fluctuation_function(concatenate(candidate), cfg));
  return report;
}

}  // namespace scenval
