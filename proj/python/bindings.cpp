#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scenval/autocorr.hpp"
#include "scenval/density.hpp"
#include "scenval/ingest.hpp"
#include "scenval/mfdfa.hpp"
#include "scenval/report.hpp"
#include "scenval/spectral.hpp"
#include "scenval/synthetic.hpp"
#include "scenval/types.hpp"

namespace py = pybind11;
using namespace scenval;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Statistical validation of fixed-length time-series scenario sets";
  m.attr("__version__") = kToolVersion;

  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<data_error>(m, "DataError", PyExc_RuntimeError);

  // --- core types -------------------------------------------------------
  py::class_<ScenarioSet>(m, "ScenarioSet")
      .def(py::init([](std::vector<double> values, std::size_t n_steps, double dt_hours,
                       std::string label) {
             return make_scenario_set(std::move(values), n_steps, dt_hours, std::move(label));
           }),
           py::arg("values"), py::arg("n_steps"), py::arg("dt_hours"),
           py::arg("label") = std::string())
      .def_readonly("values", &ScenarioSet::values)
      .def_readonly("n_scenarios", &ScenarioSet::n_scenarios)
      .def_readonly("n_steps", &ScenarioSet::n_steps)
      .def_readonly("dt_hours", &ScenarioSet::dt_hours)
      .def_readonly("label", &ScenarioSet::label)
      .def("scenario",
           [](const ScenarioSet& set, std::size_t s) {
             if (s >= set.n_scenarios) throw py::index_error();
             const auto row = set.scenario(s);
             return std::vector<double>(row.begin(), row.end());
           })
      .def("__len__", [](const ScenarioSet& set) { return set.n_scenarios; });

  py::class_<TimeSeries>(m, "TimeSeries")
      .def(py::init([](std::vector<double> values, double dt_hours, std::size_t scenario_len) {
             return TimeSeries{std::move(values), dt_hours, scenario_len};
           }),
           py::arg("values"), py::arg("dt_hours") = 0.25, py::arg("scenario_len") = 0)
      .def_readonly("values", &TimeSeries::values)
      .def_readonly("dt_hours", &TimeSeries::dt_hours)
      .def_readonly("scenario_len", &TimeSeries::scenario_len)
      .def("__len__", [](const TimeSeries& ts) { return ts.values.size(); });

  py::enum_<SampleProvenance>(m, "SampleProvenance")
      .value("all_timesteps", SampleProvenance::all_timesteps)
      .value("daily_means", SampleProvenance::daily_means);

  py::class_<SampleCollection>(m, "SampleCollection")
      .def(py::init([](std::vector<double> values, SampleProvenance provenance) {
             return SampleCollection{std::move(values), provenance};
           }),
           py::arg("values"), py::arg("provenance") = SampleProvenance::all_timesteps)
      .def_readonly("values", &SampleCollection::values)
      .def_readonly("provenance", &SampleCollection::provenance);

  m.def("concatenate", &concatenate);
  m.def("flatten_timesteps", &flatten_timesteps);
  m.def("daily_means", &daily_means);

  // --- ingest -----------------------------------------------------------
  py::class_<CleaningPolicy>(m, "CleaningPolicy")
      .def(py::init<>())
      .def_readwrite("drop_if_missing", &CleaningPolicy::drop_if_missing)
      .def_readwrite("plausible_min", &CleaningPolicy::plausible_min)
      .def_readwrite("plausible_max", &CleaningPolicy::plausible_max);

  py::class_<AffineInverse>(m, "AffineInverse")
      .def_readonly("source_min", &AffineInverse::source_min)
      .def_readonly("source_max", &AffineInverse::source_max)
      .def_readonly("target_lo", &AffineInverse::target_lo)
      .def_readonly("target_hi", &AffineInverse::target_hi)
      .def("invert", &AffineInverse::invert);

  m.def("load_scenario_csv", &load_scenario_csv, py::arg("path"), py::arg("dt_hours"));
  m.def(
      "clean_scenarios",
      [](const ScenarioSet& set, const CleaningPolicy& policy) {
        const CleaningResult r = clean_scenarios(set, policy);
        return py::make_tuple(r.set, r.dropped_count);
      },
      py::arg("set"), py::arg("policy") = CleaningPolicy());
  m.def("capacity_factor_scale", &capacity_factor_scale);
  m.def("affine_rescale", [](const ScenarioSet& set, double lo, double hi) {
    const RescaleResult r = affine_rescale(set, lo, hi);
    return py::make_tuple(r.set, r.inverse);
  });

  // --- density ----------------------------------------------------------
  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("n_points", &GridSpec::n_points)
      .def_readwrite("lo", &GridSpec::lo)
      .def_readwrite("hi", &GridSpec::hi);

  py::class_<DensityEstimate>(m, "DensityEstimate")
      .def_readonly("grid", &DensityEstimate::grid)
      .def_readonly("density", &DensityEstimate::density)
      .def_readonly("bandwidth", &DensityEstimate::bandwidth)
      .def_readonly("n_samples", &DensityEstimate::n_samples);

  m.def("default_bandwidth", &default_bandwidth);
  m.def("kde_pdf", &kde_pdf, py::arg("samples"), py::arg("bandwidth") = std::nullopt,
        py::arg("grid") = GridSpec());
  m.def("log_density", &log_density, py::arg("estimate"), py::arg("floor") = 1e-12);

  py::class_<PdfReport>(m, "PdfReport")
      .def_readonly("reference_full", &PdfReport::reference_full)
      .def_readonly("candidate_full", &PdfReport::candidate_full)
      .def_readonly("reference_marginal", &PdfReport::reference_marginal)
      .def_readonly("candidate_marginal", &PdfReport::candidate_marginal);

  m.def("pdf_report", &pdf_report, py::arg("reference"), py::arg("candidate"),
        py::arg("bandwidth") = std::nullopt, py::arg("grid_points") = 512);

  // --- autocorrelation ----------------------------------------------------
  py::class_<AcfCurve>(m, "AcfCurve")
      .def_readonly("values", &AcfCurve::values)
      .def_readonly("scenario_index", &AcfCurve::scenario_index)
      .def("max_lag", &AcfCurve::max_lag);

  py::class_<MatchResult>(m, "MatchResult")
      .def_readonly("reference_index", &MatchResult::reference_index)
      .def_readonly("best_candidate_index", &MatchResult::best_candidate_index)
      .def_readonly("mse", &MatchResult::mse)
      .def_readonly("runner_up_mses", &MatchResult::runner_up_mses)
      .def_readonly("skipped_degenerate", &MatchResult::skipped_degenerate);

  py::class_<AcfPair>(m, "AcfPair")
      .def_readonly("reference", &AcfPair::reference)
      .def_readonly("matched", &AcfPair::matched)
      .def_readonly("mse", &AcfPair::mse);

  py::class_<AcfPanel>(m, "AcfPanel")
      .def_readonly("pairs", &AcfPanel::pairs)
      .def_readonly("skipped_degenerate", &AcfPanel::skipped_degenerate)
      .def_readonly("caveat", &AcfPanel::caveat);

  m.def(
      "acf",
      [](const std::vector<double>& scenario, std::size_t max_lag) {
        return acf(scenario, max_lag);
      },
      py::arg("scenario"), py::arg("max_lag"));
  m.def(
      "best_match_by_acf",
      [](const std::vector<double>& reference, const ScenarioSet& candidates,
         std::size_t max_lag, std::size_t reference_index) {
        return best_match_by_acf(reference, candidates, max_lag, reference_index);
      },
      py::arg("reference_scenario"), py::arg("candidates"), py::arg("max_lag"),
      py::arg("reference_index") = 0);
  m.def("acf_panel", &acf_panel, py::arg("reference"), py::arg("candidates"),
        py::arg("n_examples"), py::arg("max_lag"), py::arg("seed"));

  // --- spectral -----------------------------------------------------------
  py::enum_<SpectrumMethod>(m, "SpectrumMethod")
      .value("periodogram", SpectrumMethod::periodogram)
      .value("welch", SpectrumMethod::welch);

  py::enum_<WindowKind>(m, "WindowKind")
      .value("rectangular", WindowKind::rectangular)
      .value("hann", WindowKind::hann);

  py::class_<WelchParams>(m, "WelchParams")
      .def(py::init<>())
      .def_readwrite("segment_len", &WelchParams::segment_len)
      .def_readwrite("overlap_fraction", &WelchParams::overlap_fraction)
      .def_readwrite("window", &WelchParams::window);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("frequencies", &Spectrum::frequencies)
      .def_readonly("psd", &Spectrum::psd)
      .def_readonly("periods", &Spectrum::periods)
      .def_readonly("flagged", &Spectrum::flagged)
      .def_readonly("dt_hours", &Spectrum::dt_hours)
      .def_readonly("method", &Spectrum::method)
      .def_readonly("segment_len", &Spectrum::segment_len)
      .def_readonly("overlap_fraction", &Spectrum::overlap_fraction)
      .def_readonly("window", &Spectrum::window)
      .def_readonly("n_segments", &Spectrum::n_segments)
      .def_readonly("single_segment_fallback", &Spectrum::single_segment_fallback);

  py::class_<PsdReport>(m, "PsdReport")
      .def_readonly("reference", &PsdReport::reference)
      .def_readonly("candidate", &PsdReport::candidate);

  m.def("periodogram", &periodogram);
  m.def("welch_psd", &welch_psd, py::arg("ts"), py::arg("params") = WelchParams());
  m.def("flag_periods", &flag_periods, py::arg("spectrum"), py::arg("scenario_len"),
        py::arg("dt_hours"));
  m.def("psd_report", &psd_report, py::arg("reference"), py::arg("candidate"),
        py::arg("params") = WelchParams());

  // --- mfdfa --------------------------------------------------------------
  py::enum_<SegmentationMode>(m, "SegmentationMode")
      .value("sliding", SegmentationMode::sliding)
      .value("nonoverlapping", SegmentationMode::nonoverlapping);

  py::class_<MfdfaConfig>(m, "MfdfaConfig")
      .def(py::init<>())
      .def_readwrite("q_values", &MfdfaConfig::q_values)
      .def_readwrite("detrend_order", &MfdfaConfig::detrend_order)
      .def_readwrite("s_values", &MfdfaConfig::s_values)
      .def_readwrite("mode", &MfdfaConfig::mode)
      .def_readwrite("variance_floor", &MfdfaConfig::variance_floor);

  py::class_<Profile>(m, "Profile")
      .def_readonly("values", &Profile::values)
      .def("source_len", &Profile::source_len);

  py::class_<HurstFit>(m, "HurstFit")
      .def_readonly("exponent", &HurstFit::exponent)
      .def_readonly("std_error", &HurstFit::std_error);

  py::class_<FluctuationSurface>(m, "FluctuationSurface")
      .def_readonly("s_values", &FluctuationSurface::s_values)
      .def_readonly("q_values", &FluctuationSurface::q_values)
      .def_readonly("fluctuation", &FluctuationSurface::fluctuation)
      .def_readonly("clamped_segments", &FluctuationSurface::clamped_segments)
      .def_readonly("flagged_s", &FluctuationSurface::flagged_s)
      .def_readonly("hurst", &FluctuationSurface::hurst)
      .def_readonly("scenario_len", &FluctuationSurface::scenario_len)
      .def("at", &FluctuationSurface::at, py::arg("qi"), py::arg("si"))
      .def("clamps_at", &FluctuationSurface::clamps_at, py::arg("qi"), py::arg("si"));

  py::class_<MfdfaReport>(m, "MfdfaReport")
      .def_readonly("reference", &MfdfaReport::reference)
      .def_readonly("candidate", &MfdfaReport::candidate);

  m.def("profile", &profile);
  m.def("segment_variances", &segment_variances, py::arg("profile"), py::arg("s"),
        py::arg("detrend_order") = 1, py::arg("mode") = SegmentationMode::sliding);
  m.def("fluctuation_function", &fluctuation_function, py::arg("ts"),
        py::arg("config") = MfdfaConfig());
  m.def("hurst_fit", &hurst_fit, py::arg("surface"), py::arg("s_fit_range") = std::nullopt);
  m.def("mfdfa_report", &mfdfa_report, py::arg("reference"), py::arg("candidate"),
        py::arg("config") = MfdfaConfig());

  // --- synthetic ------------------------------------------------------------
  py::enum_<GeneratorKind>(m, "GeneratorKind")
      .value("white_gaussian", GeneratorKind::white_gaussian)
      .value("ar1", GeneratorKind::ar1)
      .value("sine", GeneratorKind::sine)
      .value("random_walk", GeneratorKind::random_walk)
      .value("quantized_copy", GeneratorKind::quantized_copy);

  py::class_<GeneratorSpec>(m, "GeneratorSpec")
      .def(py::init<>())
      .def_readwrite("kind", &GeneratorSpec::kind)
      .def_readwrite("sigma", &GeneratorSpec::sigma)
      .def_readwrite("phi", &GeneratorSpec::phi)
      .def_readwrite("amplitude", &GeneratorSpec::amplitude)
      .def_readwrite("period_steps", &GeneratorSpec::period_steps)
      .def_readwrite("decimals", &GeneratorSpec::decimals)
      .def_readwrite("base_kind", &GeneratorSpec::base_kind)
      .def_readwrite("seed", &GeneratorSpec::seed)
      .def_readwrite("n", &GeneratorSpec::n)
      .def_readwrite("dt_hours", &GeneratorSpec::dt_hours);

  py::class_<GaussianStream>(m, "GaussianStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next", &GaussianStream::next);

  m.def("generate", &generate);
  m.def("quantize_half_even", &quantize_half_even, py::arg("ts"), py::arg("decimals"));
  m.def("as_scenario_set", [](const TimeSeries& ts, std::size_t scenario_len) {
    const ScenarioSplit split = as_scenario_set(ts, scenario_len);
    return py::make_tuple(split.set, split.truncated_samples);
  });

  // --- batch runs -------------------------------------------------------------
  py::enum_<Validator>(m, "Validator")
      .value("pdf", Validator::pdf)
      .value("acf", Validator::acf)
      .value("psd", Validator::psd)
      .value("mfdfa", Validator::mfdfa);

  py::class_<PdfParams>(m, "PdfParams")
      .def(py::init<>())
      .def_readwrite("bandwidth", &PdfParams::bandwidth)
      .def_readwrite("grid_points", &PdfParams::grid_points)
      .def_readwrite("log_floor", &PdfParams::log_floor);

  py::class_<AcfParams>(m, "AcfParams")
      .def(py::init<>())
      .def_readwrite("n_examples", &AcfParams::n_examples)
      .def_readwrite("max_lag", &AcfParams::max_lag);

  py::class_<ValidationConfig>(m, "ValidationConfig")
      .def(py::init<>())
      .def_readwrite("reference_csv", &ValidationConfig::reference_csv)
      .def_readwrite("candidate_csv", &ValidationConfig::candidate_csv)
      .def_readwrite("dt_hours", &ValidationConfig::dt_hours)
      .def_readwrite("validators", &ValidationConfig::validators)
      .def_readwrite("pdf", &ValidationConfig::pdf)
      .def_readwrite("acf", &ValidationConfig::acf)
      .def_readwrite("psd", &ValidationConfig::psd)
      .def_readwrite("mfdfa", &ValidationConfig::mfdfa)
      .def_readwrite("cleaning", &ValidationConfig::cleaning)
      .def_readwrite("output_dir", &ValidationConfig::output_dir)
      .def_readwrite("seed", &ValidationConfig::seed)
      .def_readwrite("emit_plots", &ValidationConfig::emit_plots);

  py::class_<ReportBundle>(m, "ReportBundle")
      .def_readonly("config", &ReportBundle::config)
      .def_readonly("pdf", &ReportBundle::pdf)
      .def_readonly("acf", &ReportBundle::acf)
      .def_readonly("psd", &ReportBundle::psd)
      .def_readonly("mfdfa", &ReportBundle::mfdfa)
      .def_readonly("warnings", &ReportBundle::warnings)
      .def_readonly("reference_digest", &ReportBundle::reference_digest)
      .def_readonly("candidate_digest", &ReportBundle::candidate_digest)
      .def_readonly("files", &ReportBundle::files);

  m.def("run_validation", &run_validation);
  m.def("emit_plot_files", &emit_plot_files, py::arg("bundle"), py::arg("output_dir"));
  m.def("config_to_json", &config_to_json);
  m.def("config_from_json", &config_from_json);
  m.def("load_config", &load_config);
}
