#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "antsel/montecarlo.hpp"
#include "cli/config.hpp"

namespace antsel::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitValidationFailed = 3,
  kExitIoError = 4,
};

/// Command-line overrides; unset fields keep the config file's values.
struct CliOptions {
  std::string config_path;
  std::optional<std::string> out_path;
  std::optional<OutputFormat> format;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::string gnuplot_path;
};

inline constexpr const char* kSweepSchema = "antsel-sweep/1";
inline constexpr const char* kAnalysisSchema = "antsel-analysis/1";

/// Closed forms and their quadrature cross-checks at one sweep point.
struct AnalysisRow {
  double point = 0.0;
  double aia_closed = 0.0;
  double a3_closed = 0.0;
  double aia_quadrature = 0.0;
  double a3_quadrature = 0.0;
  double aia_rel_gap = 0.0;
  double a3_rel_gap = 0.0;
  bool low_snr = false;
  std::string error;  // non-empty when the point could not be evaluated
};

std::vector<AnalysisRow> analyze_sweep(const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const SweepResult& r);
void write_sweep_json(std::ostream& os, const RunConfig& cfg, const SweepResult& r);
void write_analysis_csv(std::ostream& os, const RunConfig& cfg, const std::vector<AnalysisRow>& rows);
void write_analysis_json(std::ostream& os, const RunConfig& cfg, const std::vector<AnalysisRow>& rows);
void write_gnuplot(std::ostream& os, const RunConfig& cfg, const std::string& csv_path);

/// Each returns a process exit code. Results go to `out` unless an output path
/// is configured; diagnostics go to `err` as a single "error: <kind>: <message>" line.
int cmd_simulate(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_analyze(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_validate(std::ostream& out, std::ostream& err);

/// Nine significant digits, "nan" for NaN.
std::string format_float(double v);

}  // namespace antsel::cli
