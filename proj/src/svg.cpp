#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace scenval::detail {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 55.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  double to_unit(double v) const {
    const double a = log ? std::log10(v) : v;
    const double l = log ? std::log10(lo) : lo;
    const double h = log ? std::log10(hi) : hi;
    return (a - l) / (h - l);
  }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      const int e0 = static_cast<int>(std::ceil(std::log10(lo) - 1e-9));
      const int e1 = static_cast<int>(std::floor(std::log10(hi) + 1e-9));
      for (int e = e0; e <= e1; ++e) out.push_back(std::pow(10.0, e));
      if (out.size() < 2) {  // narrow range, fall back to 2-5 ticks
        out = {lo, std::sqrt(lo * hi), hi};
      }
      return out;
    }
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / 4.0)));
    if (span / step > 8.0) step *= 2.0;
    if (span / step > 8.0) step *= 2.5;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step) {
      out.push_back(std::fabs(t) < 1e-12 * span ? 0.0 : t);
    }
    return out;
  }
};

}  // namespace

void SvgChart::write(const std::string& path) const {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double x = s.x[i], y = s.y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (log_x && !(x > 0.0)) continue;
      if (log_y && !(y > 0.0)) continue;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!(x_hi > x_lo)) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  if (!(y_hi > y_lo)) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  if (!log_y) {
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
  } else {
    y_lo /= 1.5;
    y_hi *= 1.5;
  }

  const Axis ax{x_lo, x_hi, log_x};
  const Axis ay{y_lo, y_hi, log_y};
  const auto px = [&](double v) { return kLeft + kPlotW * ax.to_unit(v); };
  const auto py = [&](double v) { return kTop + kPlotH * (1.0 - ay.to_unit(v)); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write plot file: " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (shade_x) {
    double a = std::max(shade_x->first, x_lo);
    double b = std::min(shade_x->second, x_hi);
    if (b > a) {
      out << "<rect x=\"" << fmt(px(a)) << "\" y=\"" << kTop << "\" width=\""
          << fmt(px(b) - px(a)) << "\" height=\"" << kPlotH
          << "\" fill=\"#d0d0d0\" opacity=\"0.6\"/>\n";
    }
  }

  // frame + ticks
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW
      << "\" height=\"" << kPlotH << "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (double t : ax.ticks()) {
    if (t < x_lo || t > x_hi) continue;
    const double x = px(t);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << kTop + kPlotH + 5 << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << fmt(x) << "\" y=\"" << kTop + kPlotH + 20
        << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">" << fmt(t)
        << "</text>\n";
  }
  for (double t : ay.ticks()) {
    if (t < y_lo || t > y_hi) continue;
    const double y = py(t);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt(y) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(y + 4)
        << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">" << fmt(t)
        << "</text>\n";
  }

  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << " points=\"";
    bool any = false;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double x = s.x[i], y = s.y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if ((log_x && !(x > 0.0)) || (log_y && !(y > 0.0))) continue;
      out << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
      any = true;
    }
    out << "\"/>\n";
    if (!any) continue;
  }

  // legend
  double ly = kTop + 14.0;
  for (const auto& s : series) {
    if (s.label.empty()) continue;
    out << "<line x1=\"" << kLeft + 12 << "\" y1=\"" << fmt(ly - 4) << "\" x2=\"" << kLeft + 40
        << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n<text x=\"" << kLeft + 46 << "\" y=\"" << fmt(ly)
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    ly += 14.0;
  }

  out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\">"
      << title << "</text>\n"
      << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">" << x_label
      << "</text>\n"
      << "<text x=\"16\" y=\"" << kTop + kPlotH / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 16 "
      << kTop + kPlotH / 2 << ")\">" << y_label << "</text>\n"
      << "</svg>\n";
}

}  // namespace scenval::detail
