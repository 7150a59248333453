#include "scenval/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

namespace scenval {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_missing_marker(const std::string& cell) {
  if (cell.empty()) return true;
  if (cell.size() != 3) return false;
  return std::tolower(static_cast<unsigned char>(cell[0])) == 'n' &&
         std::tolower(static_cast<unsigned char>(cell[1])) == 'a' &&
         std::tolower(static_cast<unsigned char>(cell[2])) == 'n';
}

std::optional<double> parse_cell(const std::string& cell) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool row_is_fully_numeric(const std::vector<std::string>& cells) {
  for (const auto& cell : cells) {
    if (is_missing_marker(cell)) continue;
    if (!parse_cell(cell)) return false;
  }
  return true;
}

}  // namespace

ScenarioSet load_scenario_csv(const std::string& path, double dt_hours) {
  if (!(dt_hours > 0.0)) throw config_error("load_scenario_csv: dt_hours must be positive");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open scenario file: " + path);

  std::vector<double> values;
  std::size_t n_cols = 0;
  std::size_t row_number = 0;   // 1-based, as read from the file
  std::size_t data_rows = 0;
  std::string line;
  bool header_checked = false;

  while (std::getline(in, line)) {
    ++row_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;  // trailing newline
    auto cells = split_row(line);

    if (!header_checked) {
      header_checked = true;
      if (!row_is_fully_numeric(cells)) continue;  // header row, skip
    }

    if (n_cols == 0) {
      n_cols = cells.size();
      if (n_cols < 2) {
        throw data_error(path + ": row " + std::to_string(row_number) +
                         " has fewer than 2 columns");
      }
    } else if (cells.size() != n_cols) {
      throw data_error(path + ": row " + std::to_string(row_number) + " has " +
                       std::to_string(cells.size()) + " columns, expected " +
                       std::to_string(n_cols));
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (is_missing_marker(cells[c])) {
        values.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      const auto parsed = parse_cell(cells[c]);
      if (!parsed) {
        throw data_error(path + ": row " + std::to_string(row_number) + ", column " +
                         std::to_string(c + 1) + ": cannot parse '" + cells[c] + "'");
      }
      values.push_back(*parsed);
    }
    ++data_rows;
  }

  if (data_rows == 0) throw data_error(path + ": no data rows");
  ScenarioSet set;
  set.values = std::move(values);
  set.n_scenarios = data_rows;
  set.n_steps = n_cols;
  set.dt_hours = dt_hours;
  set.label = path;
  return set;
}

CleaningResult clean_scenarios(const ScenarioSet& set, const CleaningPolicy& policy) {
  if (set.n_scenarios < 1 || set.n_steps < 2 ||
      set.values.size() != set.n_scenarios * set.n_steps) {
    throw data_error("clean_scenarios: malformed scenario set");
  }
  if (policy.plausible_min && policy.plausible_max &&
      !(*policy.plausible_min < *policy.plausible_max)) {
    throw config_error("cleaning policy: plausible_min must be below plausible_max");
  }

  CleaningResult result;
  result.set.n_steps = set.n_steps;
  result.set.dt_hours = set.dt_hours;
  result.set.label = set.label;

  for (std::size_t s = 0; s < set.n_scenarios; ++s) {
    const auto row = set.scenario(s);
    bool keep = true;
    for (double v : row) {
      if (!std::isfinite(v)) {
        if (!policy.drop_if_missing && std::isnan(v)) {
          throw data_error("clean_scenarios: scenario " + std::to_string(s) +
                           " has missing values and drop_if_missing is off");
        }
        keep = false;  // missing or infinite samples make the scenario faulty
        break;
      }
      if ((policy.plausible_min && v < *policy.plausible_min) ||
          (policy.plausible_max && v > *policy.plausible_max)) {
        keep = false;
        break;
      }
    }
    if (keep) {
      result.set.values.insert(result.set.values.end(), row.begin(), row.end());
      ++result.set.n_scenarios;
    } else {
      ++result.dropped_count;
    }
  }

  if (result.set.n_scenarios == 0) {
    throw data_error("clean_scenarios: every scenario was dropped");
  }
  return result;
}

ScenarioSet capacity_factor_scale(const ScenarioSet& set, const std::vector<double>& capacity) {
  validate(set);
  const bool per_step = capacity.size() == set.n_steps;
  const bool per_sample = capacity.size() == set.values.size();
  if (!per_step && !per_sample) {
    throw data_error("capacity_factor_scale: capacity length must be T or S*T");
  }
  for (double c : capacity) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw data_error("capacity_factor_scale: capacity values must be positive");
    }
  }
  ScenarioSet out = set;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] /= per_step ? capacity[i % set.n_steps] : capacity[i];
  }
  return out;
}

RescaleResult affine_rescale(const ScenarioSet& set, double target_lo, double target_hi) {
  validate(set);
  if (!(target_lo < target_hi)) {
    throw config_error("affine_rescale: target_lo must be below target_hi");
  }
  const auto [min_it, max_it] = std::minmax_element(set.values.begin(), set.values.end());
  const double lo = *min_it, hi = *max_it;
  if (!(hi > lo)) throw data_error("affine_rescale: constant set has no range to map");

  RescaleResult result;
  result.inverse = {lo, hi, target_lo, target_hi};
  result.set = set;
  const double gain = (target_hi - target_lo) / (hi - lo);
  for (double& v : result.set.values) v = target_lo + (v - lo) * gain;
  return result;
}

}  // namespace scenval
