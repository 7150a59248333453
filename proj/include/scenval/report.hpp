#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scenval/autocorr.hpp"
#include "scenval/density.hpp"
#include "scenval/ingest.hpp"
#include "scenval/mfdfa.hpp"
#include "scenval/spectral.hpp"

namespace scenval {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Validator { pdf, acf, psd, mfdfa };

std::string validator_name(Validator v);
Validator validator_from_name(const std::string& name);

struct PdfParams {
  std::optional<double> bandwidth;  // empty: Scott's rule per estimate
  std::size_t grid_points = 512;
  double log_floor = 1e-12;
};

struct AcfParams {
  std::size_t n_examples = 4;
  std::size_t max_lag = 0;  // 0: T - 1
};

/// One batch run: which files, which validators, and every knob each
/// validator takes. Serializes to/from JSON so a run can be replayed from its
/// own echo.
struct ValidationConfig {
  std::string reference_csv;
  std::string candidate_csv;
  double dt_hours = 0.25;
  std::vector<Validator> validators = {Validator::pdf, Validator::acf, Validator::psd,
                                       Validator::mfdfa};
  PdfParams pdf;
  AcfParams acf;
  WelchParams psd;
  MfdfaConfig mfdfa;
  CleaningPolicy cleaning;
  std::string output_dir = "scenval-out";
  std::uint64_t seed = 0;
  bool emit_plots = true;
};

ValidationConfig config_from_json(const std::string& json_text);
ValidationConfig load_config(const std::string& path);
std::string config_to_json(const ValidationConfig& cfg);

/// Everything one run produced: payloads per selected validator, the
/// warnings they raised, provenance (tool version, config echo, input
/// digests), and the list of files written.
struct ReportBundle {
  ValidationConfig config;
  std::optional<PdfReport> pdf;
  std::optional<AcfPanel> acf;
  std::optional<PsdReport> psd;
  std::optional<MfdfaReport> mfdfa;
  std::vector<std::string> warnings;
  std::string reference_digest;  // fnv1a-64 of the raw file bytes, hex
  std::string candidate_digest;
  std::vector<std::string> files;  // manifest, paths relative to output_dir
};

/// Run every selected validator and write payload CSVs, the JSON summary and
/// (unless disabled) the SVG panels under config.output_dir.
ReportBundle run_validation(const ValidationConfig& cfg);

/// Write the comparison panels for the payloads present in the bundle:
/// numeric curves as CSV always, one SVG per panel when plots are enabled.
/// Returns the file manifest (relative paths).
std::vector<std::string> emit_plot_files(const ReportBundle& bundle,
                                         const std::string& output_dir);

}  // namespace scenval
