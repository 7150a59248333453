#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scenval/report.hpp"
#include "scenval/synthetic.hpp"

namespace {

using scenval::ValidationConfig;
using scenval::Validator;

// Flag values are optional so that a --config file can supply anything the
// command line leaves out; explicit flags always win.
struct CommonFlags {
  std::optional<std::string> reference;
  std::optional<std::string> candidate;
  std::optional<double> dt_hours;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config;
  bool no_plots = false;

  std::optional<double> bandwidth;
  std::optional<std::size_t> grid_points;
  std::optional<std::size_t> n_examples;
  std::optional<std::size_t> max_lag;
  std::optional<std::size_t> segment_len;
  std::optional<double> overlap;
  std::optional<std::string> window;
  std::optional<std::vector<double>> q_values;
  std::optional<int> detrend_order;
  std::optional<std::size_t> s_max;
  std::optional<std::string> mode;
  std::optional<double> plausible_min;
  std::optional<double> plausible_max;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--reference", flags.reference, "Reference scenario CSV (one scenario per row)");
  cmd->add_option("--candidate", flags.candidate, "Candidate scenario CSV to validate");
  cmd->add_option("--dt-hours", flags.dt_hours, "Sampling interval in hours");
  cmd->add_option("--out", flags.out, "Output directory");
  cmd->add_option("--seed", flags.seed, "Seed for the scenario draw in the ACF panel");
  cmd->add_option("--config", flags.config, "JSON config file; flags override its values");
  cmd->add_flag("--no-plots", flags.no_plots, "Write numeric CSV payloads only");

  cmd->add_option("--bandwidth", flags.bandwidth, "KDE bandwidth override (default: Scott's rule)");
  cmd->add_option("--grid-points", flags.grid_points, "KDE evaluation grid size");
  cmd->add_option("--n-examples", flags.n_examples, "Reference scenarios drawn for the ACF panel");
  cmd->add_option("--max-lag", flags.max_lag, "ACF maximum lag in steps (default: T-1)");
  cmd->add_option("--segment-len", flags.segment_len,
                  "Welch segment length in samples (default: 2x scenario length)");
  cmd->add_option("--overlap", flags.overlap, "Welch segment overlap fraction in [0,1)");
  cmd->add_option("--window", flags.window, "Welch window: hann or rectangular");
  cmd->add_option("--q", flags.q_values, "Fluctuation q powers (default: 2 4 10 -2 -4 -10)");
  cmd->add_option("--detrend-order", flags.detrend_order, "Detrending polynomial order");
  cmd->add_option("--s-max", flags.s_max,
                  "Largest fluctuation segment length (default: scenario length)");
  cmd->add_option("--mode", flags.mode, "Segmentation: sliding or nonoverlapping");
  cmd->add_option("--plausible-min", flags.plausible_min, "Drop scenarios below this value");
  cmd->add_option("--plausible-max", flags.plausible_max, "Drop scenarios above this value");
}

ValidationConfig build_config(const CommonFlags& flags, std::vector<Validator> validators) {
  ValidationConfig cfg;
  if (flags.config) cfg = scenval::load_config(*flags.config);
  cfg.validators = std::move(validators);

  if (flags.reference) cfg.reference_csv = *flags.reference;
  if (flags.candidate) cfg.candidate_csv = *flags.candidate;
  if (flags.dt_hours) cfg.dt_hours = *flags.dt_hours;
  if (flags.out) cfg.output_dir = *flags.out;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.no_plots) cfg.emit_plots = false;

  if (flags.bandwidth) cfg.pdf.bandwidth = *flags.bandwidth;
  if (flags.grid_points) cfg.pdf.grid_points = *flags.grid_points;
  if (flags.n_examples) cfg.acf.n_examples = *flags.n_examples;
  if (flags.max_lag) cfg.acf.max_lag = *flags.max_lag;
  if (flags.segment_len) cfg.psd.segment_len = *flags.segment_len;
  if (flags.overlap) cfg.psd.overlap_fraction = *flags.overlap;
  if (flags.window) {
    if (*flags.window == "hann") {
      cfg.psd.window = scenval::WindowKind::hann;
    } else if (*flags.window == "rectangular") {
      cfg.psd.window = scenval::WindowKind::rectangular;
    } else {
      throw scenval::config_error("unknown window: " + *flags.window);
    }
  }
  if (flags.q_values) cfg.mfdfa.q_values = *flags.q_values;
  if (flags.detrend_order) cfg.mfdfa.detrend_order = *flags.detrend_order;
  if (flags.s_max) {
    cfg.mfdfa.s_values.clear();
    const std::size_t s_min = static_cast<std::size_t>(cfg.mfdfa.detrend_order) + 2;
    for (std::size_t s = s_min; s <= *flags.s_max; ++s) cfg.mfdfa.s_values.push_back(s);
  }
  if (flags.mode) {
    if (*flags.mode == "sliding") {
      cfg.mfdfa.mode = scenval::SegmentationMode::sliding;
    } else if (*flags.mode == "nonoverlapping") {
      cfg.mfdfa.mode = scenval::SegmentationMode::nonoverlapping;
    } else {
      throw scenval::config_error("unknown segmentation mode: " + *flags.mode);
    }
  }
  if (flags.plausible_min) cfg.cleaning.plausible_min = *flags.plausible_min;
  if (flags.plausible_max) cfg.cleaning.plausible_max = *flags.plausible_max;
  return cfg;
}

int run_and_report(const ValidationConfig& cfg) {
  const scenval::ReportBundle bundle = scenval::run_validation(cfg);
  for (const auto& w : bundle.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "wrote " << bundle.files.size() << " file(s) under " << cfg.output_dir << '\n';
  return 0;
}

struct SynthFlags {
  std::string kind = "white_gaussian";
  std::string base = "white_gaussian";
  double sigma = 1.0;
  double phi = 0.0;
  double amplitude = 1.0;
  std::size_t period_steps = 24;
  int decimals = 2;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t scenario_len = 96;
  double dt_hours = 0.25;
  std::string out;
};

scenval::GeneratorKind kind_from_name(const std::string& name) {
  using scenval::GeneratorKind;
  if (name == "white_gaussian") return GeneratorKind::white_gaussian;
  if (name == "ar1") return GeneratorKind::ar1;
  if (name == "sine") return GeneratorKind::sine;
  if (name == "random_walk") return GeneratorKind::random_walk;
  if (name == "quantized_copy") return GeneratorKind::quantized_copy;
  throw scenval::config_error("unknown generator kind: " + name);
}

int run_synthesize(const SynthFlags& flags) {
  scenval::GeneratorSpec spec;
  spec.kind = kind_from_name(flags.kind);
  spec.base_kind = kind_from_name(flags.base);
  spec.sigma = flags.sigma;
  spec.phi = flags.phi;
  spec.amplitude = flags.amplitude;
  spec.period_steps = flags.period_steps;
  spec.decimals = flags.decimals;
  spec.seed = flags.seed;
  spec.n = flags.n > 0 ? flags.n : flags.scenario_len * 365;
  spec.dt_hours = flags.dt_hours;

  const scenval::TimeSeries ts = scenval::generate(spec);
  const auto split = scenval::as_scenario_set(ts, flags.scenario_len);
  if (split.truncated_samples > 0) {
    std::cerr << "warning: truncated " << split.truncated_samples
              << " trailing sample(s) to fill whole scenarios\n";
  }

  std::ofstream out(flags.out, std::ios::binary);
  if (!out) throw scenval::data_error("cannot write " + flags.out);
  char buf[40];
  const auto& set = split.set;
  for (std::size_t s = 0; s < set.n_scenarios; ++s) {
    for (std::size_t t = 0; t < set.n_steps; ++t) {
      std::snprintf(buf, sizeof(buf), "%.17g", set.at(s, t));
      out << buf << (t + 1 < set.n_steps ? "," : "");
    }
    out << '\n';
  }
  std::cout << "wrote " << set.n_scenarios << " scenarios x " << set.n_steps << " steps to "
            << flags.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical validation of fixed-length time-series scenario sets"};
  app.require_subcommand(1);

  CommonFlags validate_flags, pdf_flags, acf_flags, psd_flags, mfdfa_flags;
  auto* validate = app.add_subcommand(
      "validate", "Run every selected validator and write a comparison report");
  add_common_flags(validate, validate_flags);
  std::vector<std::string> validator_names;
  validate->add_option("--validators", validator_names,
                       "Subset of: pdf acf psd mfdfa (default: all)");

  add_common_flags(app.add_subcommand("pdf", "Density comparison only"), pdf_flags);
  add_common_flags(app.add_subcommand("acf", "Autocorrelation panel only"), acf_flags);
  add_common_flags(app.add_subcommand("psd", "Spectral comparison only"), psd_flags);
  add_common_flags(app.add_subcommand("mfdfa", "Fluctuation analysis only"), mfdfa_flags);

  SynthFlags synth;
  auto* synthesize =
      app.add_subcommand("synthesize", "Generate a synthetic scenario CSV fixture");
  synthesize->add_option("--kind", synth.kind,
                         "white_gaussian, ar1, sine, random_walk or quantized_copy");
  synthesize->add_option("--base", synth.base, "Source kind for quantized_copy");
  synthesize->add_option("--sigma", synth.sigma, "Noise standard deviation");
  synthesize->add_option("--phi", synth.phi, "AR(1) coefficient, |phi| < 1");
  synthesize->add_option("--amplitude", synth.amplitude, "Sine amplitude");
  synthesize->add_option("--period-steps", synth.period_steps, "Sine period in samples");
  synthesize->add_option("--decimals", synth.decimals, "Half-even rounding digits");
  synthesize->add_option("--seed", synth.seed, "Generator seed");
  synthesize->add_option("--n", synth.n, "Series length (default: 365 scenarios)");
  synthesize->add_option("--scenario-len", synth.scenario_len, "Samples per scenario");
  synthesize->add_option("--dt-hours", synth.dt_hours, "Sampling interval in hours");
  synthesize->add_option("--out", synth.out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);

    if (synthesize->parsed()) return run_synthesize(synth);

    if (validate->parsed()) {
      std::vector<Validator> validators;
      for (const auto& name : validator_names) {
        validators.push_back(scenval::validator_from_name(name));
      }
      if (validators.empty()) {
        validators = {Validator::pdf, Validator::acf, Validator::psd, Validator::mfdfa};
      }
      return run_and_report(build_config(validate_flags, std::move(validators)));
    }
    if (app.get_subcommand("pdf")->parsed()) {
      return run_and_report(build_config(pdf_flags, {Validator::pdf}));
    }
    if (app.get_subcommand("acf")->parsed()) {
      return run_and_report(build_config(acf_flags, {Validator::acf}));
    }
    if (app.get_subcommand("psd")->parsed()) {
      return run_and_report(build_config(psd_flags, {Validator::psd}));
    }
    if (app.get_subcommand("mfdfa")->parsed()) {
      return run_and_report(build_config(mfdfa_flags, {Validator::mfdfa}));
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // 0 for --help, nonzero usage errors otherwise
  } catch (const scenval::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const scenval::data_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
