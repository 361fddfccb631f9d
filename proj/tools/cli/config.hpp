#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "antsel/montecarlo.hpp"

namespace antsel::cli {

enum class OutputFormat { Csv, Json };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File-sourced run description. Omitted keys take the reference-scenario
/// defaults (N=2, M=K=2, d1=30, d2=100, alpha=3, b=0.4, sigma=-70 dBm) and a
/// transmit-power sweep 0:5:40 dBm over every scheme.
struct RunConfig {
  SweepSpec sweep;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty: stdout
  int verbosity = 0;
  std::string source = "(defaults)";
  bool all_defaults = true;  // no key was set by the file
};

RunConfig default_run_config();

/// INI-style text with [scenario], [sweep] and [output] sections. Unknown
/// sections or keys, keys outside a section, and malformed values throw ConfigError.
RunConfig parse_config(std::istream& in, const std::string& source_name);

/// Reads and parses a file; an empty path yields default_run_config().
/// Throws ConfigError for bad content and std::ios_base::failure when unreadable.
RunConfig load_config(const std::string& path);

/// Points as either "v1, v2, ..." or "start:step:stop" (inclusive stop).
std::vector<double> parse_points(const std::string& text);

/// Canonical key = value lines describing the effective configuration.
std::vector<std::string> echo_config(const RunConfig& cfg);

}  // namespace antsel::cli
