#include "scenval/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "svg.hpp"

namespace scenval {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kReferenceColor = "#1f77b4";
constexpr const char* kCandidateColor = "#d62728";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a64_hex(ss.str());
}

std::string window_name(WindowKind w) {
  return w == WindowKind::hann ? "hann" : "rectangular";
}

WindowKind window_from_name(const std::string& name) {
  if (name == "hann") return WindowKind::hann;
  if (name == "rectangular") return WindowKind::rectangular;
  throw config_error("unknown window: " + name);
}

std::string mode_name(SegmentationMode m) {
  return m == SegmentationMode::sliding ? "sliding" : "nonoverlapping";
}

SegmentationMode mode_from_name(const std::string& name) {
  if (name == "sliding") return SegmentationMode::sliding;
  if (name == "nonoverlapping") return SegmentationMode::nonoverlapping;
  throw config_error("unknown segmentation mode: " + name);
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
    if (!out_) throw data_error("cannot write output file: " + path.string());
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

void check_config(const ValidationConfig& cfg) {
  if (cfg.validators.empty()) throw config_error("config: select at least one validator");
  if (!(cfg.dt_hours > 0.0)) throw config_error("config: dt_hours must be positive");
  if (cfg.output_dir.empty()) throw config_error("config: output_dir must not be empty");
  if (cfg.reference_csv.empty() || cfg.candidate_csv.empty()) {
    throw config_error("config: reference and candidate paths are required");
  }
}

ScenarioSet load_and_clean(const std::string& path, const ValidationConfig& cfg,
                           const char* role, std::vector<std::string>& warnings) {
  const ScenarioSet raw = load_scenario_csv(path, cfg.dt_hours);
  CleaningResult cleaned = clean_scenarios(raw, cfg.cleaning);
  if (cleaned.dropped_count > 0) {
    warnings.push_back(std::string(role) + ": dropped " +
                       std::to_string(cleaned.dropped_count) + " faulty scenario(s)");
  }
  validate(cleaned.set);
  return std::move(cleaned.set);
}

}  // namespace

std::string validator_name(Validator v) {
  switch (v) {
    case Validator::pdf: return "pdf";
    case Validator::acf: return "acf";
    case Validator::psd: return "psd";
    case Validator::mfdfa: return "mfdfa";
  }
  throw config_error("unknown validator");
}

Validator validator_from_name(const std::string& name) {
  if (name == "pdf") return Validator::pdf;
  if (name == "acf") return Validator::acf;
  if (name == "psd") return Validator::psd;
  if (name == "mfdfa") return Validator::mfdfa;
  throw config_error("unknown validator: " + name);
}

std::string config_to_json(const ValidationConfig& cfg) {
  ordered_json j;
  j["reference_csv"] = cfg.reference_csv;
  j["candidate_csv"] = cfg.candidate_csv;
  j["dt_hours"] = cfg.dt_hours;
  j["validators"] = ordered_json::array();
  for (Validator v : cfg.validators) j["validators"].push_back(validator_name(v));
  j["output_dir"] = cfg.output_dir;
  j["seed"] = cfg.seed;
  j["emit_plots"] = cfg.emit_plots;

  ordered_json cleaning;
  cleaning["drop_if_missing"] = cfg.cleaning.drop_if_missing;
  if (cfg.cleaning.plausible_min) cleaning["plausible_min"] = *cfg.cleaning.plausible_min;
  if (cfg.cleaning.plausible_max) cleaning["plausible_max"] = *cfg.cleaning.plausible_max;
  j["cleaning"] = cleaning;

  ordered_json pdf;
  if (cfg.pdf.bandwidth) pdf["bandwidth"] = *cfg.pdf.bandwidth;
  pdf["grid_points"] = cfg.pdf.grid_points;
  pdf["log_floor"] = cfg.pdf.log_floor;
  j["pdf"] = pdf;

  ordered_json acf;
  acf["n_examples"] = cfg.acf.n_examples;
  acf["max_lag"] = cfg.acf.max_lag;
  j["acf"] = acf;

  ordered_json psd;
  psd["segment_len"] = cfg.psd.segment_len;
  psd["overlap_fraction"] = cfg.psd.overlap_fraction;
  psd["window"] = window_name(cfg.psd.window);
  j["psd"] = psd;

  ordered_json mfdfa;
  mfdfa["q_values"] = cfg.mfdfa.q_values;
  mfdfa["detrend_order"] = cfg.mfdfa.detrend_order;
  mfdfa["s_values"] = cfg.mfdfa.s_values;
  mfdfa["mode"] = mode_name(cfg.mfdfa.mode);
  mfdfa["variance_floor"] = cfg.mfdfa.variance_floor;
  j["mfdfa"] = mfdfa;

  return j.dump(2);
}

ValidationConfig config_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }

  ValidationConfig cfg;
  try {
    cfg.reference_csv = j.value("reference_csv", cfg.reference_csv);
    cfg.candidate_csv = j.value("candidate_csv", cfg.candidate_csv);
    cfg.dt_hours = j.value("dt_hours", cfg.dt_hours);
    if (j.contains("validators")) {
      cfg.validators.clear();
      for (const auto& v : j["validators"]) {
        cfg.validators.push_back(validator_from_name(v.get<std::string>()));
      }
    }
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.emit_plots = j.value("emit_plots", cfg.emit_plots);

    if (j.contains("cleaning")) {
      const auto& c = j["cleaning"];
      cfg.cleaning.drop_if_missing = c.value("drop_if_missing", cfg.cleaning.drop_if_missing);
      if (c.contains("plausible_min")) cfg.cleaning.plausible_min = c["plausible_min"].get<double>();
      if (c.contains("plausible_max")) cfg.cleaning.plausible_max = c["plausible_max"].get<double>();
    }
    if (j.contains("pdf")) {
      const auto& p = j["pdf"];
      if (p.contains("bandwidth")) cfg.pdf.bandwidth = p["bandwidth"].get<double>();
      cfg.pdf.grid_points = p.value("grid_points", cfg.pdf.grid_points);
      cfg.pdf.log_floor = p.value("log_floor", cfg.pdf.log_floor);
    }
    if (j.contains("acf")) {
      const auto& a = j["acf"];
      cfg.acf.n_examples = a.value("n_examples", cfg.acf.n_examples);
      cfg.acf.max_lag = a.value("max_lag", cfg.acf.max_lag);
    }
    if (j.contains("psd")) {
      const auto& p = j["psd"];
      cfg.psd.segment_len = p.value("segment_len", cfg.psd.segment_len);
      cfg.psd.overlap_fraction = p.value("overlap_fraction", cfg.psd.overlap_fraction);
      if (p.contains("window")) cfg.psd.window = window_from_name(p["window"].get<std::string>());
    }
    if (j.contains("mfdfa")) {
      const auto& m = j["mfdfa"];
      if (m.contains("q_values")) cfg.mfdfa.q_values = m["q_values"].get<std::vector<double>>();
      cfg.mfdfa.detrend_order = m.value("detrend_order", cfg.mfdfa.detrend_order);
      if (m.contains("s_values")) {
        cfg.mfdfa.s_values = m["s_values"].get<std::vector<std::size_t>>();
      }
      if (m.contains("mode")) cfg.mfdfa.mode = mode_from_name(m["mode"].get<std::string>());
      cfg.mfdfa.variance_floor = m.value("variance_floor", cfg.mfdfa.variance_floor);
    }
  } catch (const ordered_json::exception& e) {
    throw config_error(std::string("malformed config value: ") + e.what());
  }
  return cfg;
}

ValidationConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

ReportBundle run_validation(const ValidationConfig& cfg) {
  check_config(cfg);

  ReportBundle bundle;
  bundle.config = cfg;
  bundle.reference_digest = digest_file(cfg.reference_csv);
  bundle.candidate_digest = digest_file(cfg.candidate_csv);

  const ScenarioSet reference =
      load_and_clean(cfg.reference_csv, cfg, "reference", bundle.warnings);
  const ScenarioSet candidate =
      load_and_clean(cfg.candidate_csv, cfg, "candidate", bundle.warnings);
  if (reference.n_steps != candidate.n_steps) {
    throw data_error("reference and candidate scenario lengths differ (" +
                     std::to_string(reference.n_steps) + " vs " +
                     std::to_string(candidate.n_steps) + ")");
  }

  const auto selected = [&](Validator v) {
    return std::find(cfg.validators.begin(), cfg.validators.end(), v) != cfg.validators.end();
  };

  // Fixed execution order keeps summaries and warnings reproducible.
  if (selected(Validator::pdf)) {
    bundle.pdf = pdf_report(reference, candidate, cfg.pdf.bandwidth, cfg.pdf.grid_points);
  }
  if (selected(Validator::acf)) {
    const std::size_t max_lag =
        cfg.acf.max_lag > 0 ? cfg.acf.max_lag : reference.n_steps - 1;
    const std::size_t n_examples = std::min(cfg.acf.n_examples, reference.n_scenarios);
    bundle.acf = acf_panel(reference, candidate, n_examples, max_lag, cfg.seed);
    if (bundle.acf->skipped_degenerate > 0) {
      bundle.warnings.push_back("acf: skipped " +
                                std::to_string(bundle.acf->skipped_degenerate) +
                                " degenerate candidate scenario(s) during matching");
    }
  }
  if (selected(Validator::psd)) {
    bundle.psd = psd_report(reference, candidate, cfg.psd);
    const double bound = static_cast<double>(reference.n_steps) * cfg.dt_hours / 2.0;
    bundle.warnings.push_back("psd: periods above " + num(bound) +
                              " h may span concatenated scenarios and are flagged");
    if (bundle.psd->reference.single_segment_fallback ||
        bundle.psd->candidate.single_segment_fallback) {
      bundle.warnings.push_back("psd: fewer than 2 segments available, estimate equals a "
                                "single windowed periodogram");
    }
  }
  if (selected(Validator::mfdfa)) {
    bundle.mfdfa = mfdfa_report(reference, candidate, cfg.mfdfa);
    bundle.warnings.push_back("mfdfa: segment lengths >= " +
                              std::to_string((reference.n_steps + 1) / 2) +
                              " may span concatenated scenarios and are flagged");
    std::size_t total_clamps = 0;
    for (std::size_t c : bundle.mfdfa->reference.clamped_segments) total_clamps += c;
    for (std::size_t c : bundle.mfdfa->candidate.clamped_segments) total_clamps += c;
    if (total_clamps > 0) {
      bundle.warnings.push_back(
          "mfdfa: variance floor applied (near-perfect polynomial segments present); see "
          "clamped_segments");
    }
  }

  bundle.files = emit_plot_files(bundle, cfg.output_dir);
  return bundle;
}

namespace {

void write_pdf_csv(const PdfReport& pdf, double log_floor, const std::filesystem::path& dir,
                   std::vector<std::string>& files) {
  const auto dump_pair = [&](const DensityEstimate& ref, const DensityEstimate& cand,
                             const std::string& name) {
    CsvWriter csv(dir / name);
    csv.row({"grid", "reference_density", "candidate_density", "reference_log10",
             "candidate_log10"});
    const auto ref_log = log_density(ref, log_floor);
    const auto cand_log = log_density(cand, log_floor);
    for (std::size_t i = 0; i < ref.grid.size(); ++i) {
      csv.row({num(ref.grid[i]), num(ref.density[i]), num(cand.density[i]), num(ref_log[i]),
               num(cand_log[i])});
    }
    files.push_back(name);
  };
  dump_pair(pdf.reference_full, pdf.candidate_full, "pdf_full.csv");
  dump_pair(pdf.reference_marginal, pdf.candidate_marginal, "pdf_marginal.csv");
}

void write_pdf_svgs(const PdfReport& pdf, double log_floor, const std::filesystem::path& dir,
                    std::vector<std::string>& files) {
  const auto curves = [&](const DensityEstimate& ref, const DensityEstimate& cand, bool log10) {
    std::vector<detail::SvgSeries> s(2);
    s[0] = {ref.grid, log10 ? log_density(ref, log_floor) : ref.density, kReferenceColor,
            "reference", false};
    s[1] = {cand.grid, log10 ? log_density(cand, log_floor) : cand.density, kCandidateColor,
            "candidate", true};
    return s;
  };

  detail::SvgChart linear;
  linear.title = "Probability density (all time steps)";
  linear.x_label = "value";
  linear.y_label = "density";
  linear.series = curves(pdf.reference_full, pdf.candidate_full, false);
  linear.write((dir / "pdf_linear.svg").string());
  files.push_back("pdf_linear.svg");

  detail::SvgChart log;
  log.title = "Probability density, log scale (all time steps)";
  log.x_label = "value";
  log.y_label = "log10 density";
  log.series = curves(pdf.reference_full, pdf.candidate_full, true);
  log.write((dir / "pdf_log.svg").string());
  files.push_back("pdf_log.svg");

  detail::SvgChart marginal;
  marginal.title = "Probability density of the per-scenario mean";
  marginal.x_label = "scenario mean";
  marginal.y_label = "density";
  marginal.series = curves(pdf.reference_marginal, pdf.candidate_marginal, false);
  marginal.write((dir / "pdf_marginal.svg").string());
  files.push_back("pdf_marginal.svg");
}

void write_acf_csv(const AcfPanel& panel, const std::filesystem::path& dir,
                   std::vector<std::string>& files) {
  CsvWriter csv(dir / "acf_panel.csv");
  csv.row({"pair", "reference_scenario", "matched_scenario", "lag", "reference_acf",
           "matched_acf"});
  for (std::size_t p = 0; p < panel.pairs.size(); ++p) {
    const auto& pair = panel.pairs[p];
    for (std::size_t lag = 0; lag < pair.reference.values.size(); ++lag) {
      csv.row({std::to_string(p), std::to_string(pair.reference.scenario_index),
               std::to_string(pair.matched.scenario_index), std::to_string(lag),
               num(pair.reference.values[lag]), num(pair.matched.values[lag])});
    }
  }
  files.push_back("acf_panel.csv");
}

void write_acf_svg(const AcfPanel& panel, double dt_hours, const std::filesystem::path& dir,
                   std::vector<std::string>& files) {
  static const char* kPairColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
  detail::SvgChart chart;
  chart.title = "Autocorrelation: drawn reference scenarios vs best-matching candidates";
  chart.x_label = "lag [h]";
  chart.y_label = "autocorrelation";
  for (std::size_t p = 0; p < panel.pairs.size(); ++p) {
    const auto& pair = panel.pairs[p];
    std::vector<double> lags(pair.reference.values.size());
    for (std::size_t i = 0; i < lags.size(); ++i) lags[i] = static_cast<double>(i) * dt_hours;
    const char* color = kPairColors[p % 8];
    chart.series.push_back({lags, pair.reference.values, color,
                            "reference #" + std::to_string(pair.reference.scenario_index),
                            false});
    chart.series.push_back({lags, pair.matched.values, color,
                            "match #" + std::to_string(pair.matched.scenario_index), true});
  }
  chart.write((dir / "acf_panel.svg").string());
  files.push_back("acf_panel.svg");
}

void write_psd_csv(const PsdReport& psd, const std::filesystem::path& dir,
                   std::vector<std::string>& files) {
  CsvWriter csv(dir / "psd.csv");
  csv.row({"frequency_per_hour", "period_hours", "reference_psd", "candidate_psd", "flagged"});
  for (std::size_t i = 0; i < psd.reference.psd.size(); ++i) {
    csv.row({num(psd.reference.frequencies[i]), num(psd.reference.periods[i]),
             num(psd.reference.psd[i]), num(psd.candidate.psd[i]),
             psd.reference.flagged[i] ? "1" : "0"});
  }
  files.push_back("psd.csv");
}

void write_psd_svg(const PsdReport& psd, const std::filesystem::path& dir,
                   std::vector<std::string>& files) {
  detail::SvgChart chart;
  chart.title = "Power spectral density of the concatenated scenarios";
  chart.x_label = "period [h]";
  chart.y_label = "PSD [signal^2 h]";
  chart.log_x = true;
  chart.log_y = true;
  double flag_lo = 0.0, flag_hi = 0.0;
  for (std::size_t i = 0; i < psd.reference.flagged.size(); ++i) {
    if (psd.reference.flagged[i]) {
      const double p = psd.reference.periods[i];
      if (flag_lo == 0.0 || p < flag_lo) flag_lo = p;
      if (p > flag_hi) flag_hi = p;
    }
  }
  if (flag_hi > 0.0) chart.shade_x = {flag_lo, flag_hi};
  chart.series.push_back(
      {psd.reference.periods, psd.reference.psd, kReferenceColor, "reference", false});
  chart.series.push_back(
      {psd.candidate.periods, psd.candidate.psd, kCandidateColor, "candidate", true});
  chart.write((dir / "psd.svg").string());
  files.push_back("psd.svg");
}

void write_mfdfa_csv(const MfdfaReport& report, const std::filesystem::path& dir,
                     std::vector<std::string>& files) {
  CsvWriter csv(dir / "mfdfa.csv");
  csv.row({"q", "s", "reference_f", "candidate_f", "reference_clamped", "candidate_clamped",
           "flagged"});
  const auto& ref = report.reference;
  const auto& cand = report.candidate;
  for (std::size_t qi = 0; qi < ref.q_values.size(); ++qi) {
    for (std::size_t si = 0; si < ref.s_values.size(); ++si) {
      csv.row({num(ref.q_values[qi]), std::to_string(ref.s_values[si]), num(ref.at(qi, si)),
               num(cand.at(qi, si)), std::to_string(ref.clamps_at(qi, si)),
               std::to_string(cand.clamps_at(qi, si)), ref.flagged_s[si] ? "1" : "0"});
    }
  }
  files.push_back("mfdfa.csv");
}

void write_mfdfa_svgs(const MfdfaReport& report, const std::filesystem::path& dir,
                      std::vector<std::string>& files) {
  const auto panel = [&](bool positive, const std::string& name, const std::string& title) {
    static const char* kQColors[] = {"#1f77b4", "#2ca02c", "#9467bd"};
    detail::SvgChart chart;
    chart.title = title;
    chart.x_label = "segment length s";
    chart.y_label = "F_q(s)";
    chart.log_x = true;
    chart.log_y = true;

    const auto& ref = report.reference;
    double flag_lo = 0.0;
    for (std::size_t si = 0; si < ref.s_values.size(); ++si) {
      if (ref.flagged_s[si]) {
        flag_lo = static_cast<double>(ref.s_values[si]);
        break;
      }
    }
    if (flag_lo > 0.0) chart.shade_x = {flag_lo, static_cast<double>(ref.s_values.back())};

    std::vector<double> s_axis(ref.s_values.size());
    for (std::size_t i = 0; i < s_axis.size(); ++i) {
      s_axis[i] = static_cast<double>(ref.s_values[i]);
    }
    std::size_t color = 0;
    for (std::size_t qi = 0; qi < ref.q_values.size(); ++qi) {
      const double q = ref.q_values[qi];
      if ((q > 0.0) != positive) continue;
      std::vector<double> fr(ref.s_values.size()), fc(ref.s_values.size());
      for (std::size_t si = 0; si < ref.s_values.size(); ++si) {
        fr[si] = ref.at(qi, si);
        fc[si] = report.candidate.at(qi, si);
      }
      const char* c = kQColors[color++ % 3];
      chart.series.push_back({s_axis, fr, c, "reference q=" + num(q), false});
      chart.series.push_back({s_axis, fc, c, "candidate q=" + num(q), true});
    }
    chart.write((dir / name).string());
    files.push_back(name);
  };
  panel(true, "mfdfa_positive_q.svg", "Fluctuation function, positive q");
  panel(false, "mfdfa_negative_q.svg", "Fluctuation function, negative q");
}

ordered_json summary_json(const ReportBundle& bundle) {
  ordered_json j;
  ordered_json prov;
  prov["tool"] = "scenval";
  prov["version"] = kToolVersion;
  prov["config"] = ordered_json::parse(config_to_json(bundle.config));
  prov["reference_digest_fnv1a64"] = bundle.reference_digest;
  prov["candidate_digest_fnv1a64"] = bundle.candidate_digest;
  j["provenance"] = prov;
  j["warnings"] = bundle.warnings;

  if (bundle.pdf) {
    ordered_json p;
    p["full_reference_bandwidth"] = bundle.pdf->reference_full.bandwidth;
    p["full_candidate_bandwidth"] = bundle.pdf->candidate_full.bandwidth;
    p["marginal_reference_bandwidth"] = bundle.pdf->reference_marginal.bandwidth;
    p["marginal_candidate_bandwidth"] = bundle.pdf->candidate_marginal.bandwidth;
    p["full_n_samples"] = bundle.pdf->reference_full.n_samples;
    p["marginal_n_samples"] = bundle.pdf->reference_marginal.n_samples;
    j["pdf"] = p;
  }
  if (bundle.acf) {
    ordered_json a;
    a["caveat"] = bundle.acf->caveat;
    a["skipped_degenerate"] = bundle.acf->skipped_degenerate;
    a["pairs"] = ordered_json::array();
    for (const auto& pair : bundle.acf->pairs) {
      ordered_json e;
      e["reference_scenario"] = pair.reference.scenario_index;
      e["matched_scenario"] = pair.matched.scenario_index;
      e["mse"] = pair.mse;
      a["pairs"].push_back(e);
    }
    j["acf"] = a;
  }
  if (bundle.psd) {
    ordered_json p;
    p["segment_len"] = bundle.psd->reference.segment_len;
    p["overlap_fraction"] = bundle.psd->reference.overlap_fraction;
    p["window"] = window_name(bundle.psd->reference.window);
    p["n_segments_reference"] = bundle.psd->reference.n_segments;
    p["n_segments_candidate"] = bundle.psd->candidate.n_segments;
    p["single_segment_fallback"] = bundle.psd->reference.single_segment_fallback ||
                                   bundle.psd->candidate.single_segment_fallback;
    std::size_t flagged = 0;
    for (bool f : bundle.psd->reference.flagged) flagged += f ? 1 : 0;
    p["flagged_bins"] = flagged;
    j["psd"] = p;
  }
  if (bundle.mfdfa) {
    const auto hurst_block = [](const FluctuationSurface& s) {
      ordered_json h = ordered_json::array();
      for (std::size_t qi = 0; qi < s.q_values.size(); ++qi) {
        ordered_json e;
        e["q"] = s.q_values[qi];
        e["h"] = s.hurst[qi].exponent;
        e["std_error"] = s.hurst[qi].std_error;
        std::size_t clamps = 0;
        for (std::size_t si = 0; si < s.s_values.size(); ++si) clamps += s.clamps_at(qi, si);
        e["clamped_segments"] = clamps;
        h.push_back(e);
      }
      return h;
    };
    ordered_json m;
    m["reference_hurst"] = hurst_block(bundle.mfdfa->reference);
    m["candidate_hurst"] = hurst_block(bundle.mfdfa->candidate);
    std::size_t first_flagged = 0;
    const auto& ref = bundle.mfdfa->reference;
    for (std::size_t si = 0; si < ref.s_values.size(); ++si) {
      if (ref.flagged_s[si]) {
        first_flagged = ref.s_values[si];
        break;
      }
    }
    m["first_flagged_s"] = first_flagged;
    j["mfdfa"] = m;
  }
  return j;
}

}  // namespace

std::vector<std::string> emit_plot_files(const ReportBundle& bundle,
                                         const std::string& output_dir) {
  std::filesystem::path dir(output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw data_error("cannot create output directory: " + output_dir);

  std::vector<std::string> files;
  const bool plots = bundle.config.emit_plots;

  if (bundle.pdf) {
    write_pdf_csv(*bundle.pdf, bundle.config.pdf.log_floor, dir, files);
    if (plots) write_pdf_svgs(*bundle.pdf, bundle.config.pdf.log_floor, dir, files);
  }
  if (bundle.acf) {
    write_acf_csv(*bundle.acf, dir, files);
    if (plots) write_acf_svg(*bundle.acf, bundle.config.dt_hours, dir, files);
  }
  if (bundle.psd) {
    write_psd_csv(*bundle.psd, dir, files);
    if (plots) write_psd_svg(*bundle.psd, dir, files);
  }
  if (bundle.mfdfa) {
    write_mfdfa_csv(*bundle.mfdfa, dir, files);
    if (plots) write_mfdfa_svgs(*bundle.mfdfa, dir, files);
  }

  {
    std::ofstream out(dir / "summary.json", std::ios::binary);
    if (!out) throw data_error("cannot write summary.json under " + output_dir);
    out << summary_json(bundle).dump(2) << '\n';
    files.push_back("summary.json");
  }
  return files;
}

}  // namespace scenval
