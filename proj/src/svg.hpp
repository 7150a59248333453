#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scenval::detail {

struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  std::string label;
  bool dashed = false;
};

/// Minimal static line chart. Supports log axes, a shaded x-band for flagged
/// regions, axis ticks, and a legend; enough for the comparison panels, no
/// more.
struct SvgChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::optional<std::pair<double, double>> shade_x;  // drawn in light gray
  std::vector<SvgSeries> series;

  void write(const std::string& path) const;
};

}  // namespace scenval::detail
