#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <json.hpp>

#include "antsel/analysis.hpp"
#include "antsel/validation.hpp"

namespace antsel::cli {

namespace {

using json = nlohmann::ordered_json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_header(std::ostream& os, const char* schema, const char* command, const RunConfig& cfg) {
  os << "# schema: " << schema << "\n";
  os << "# command: " << command << "\n";
  os << "# config: " << cfg.source << "\n";
  if (cfg.all_defaults) {
    os << "# defaults: reference scenario applied (N=2, M=K=2, d1=30, d2=100, alpha=3, "
          "a=0.6, b=0.4, sigma=-70 dBm)\n";
  }
  for (const auto& line : echo_config(cfg)) os << "# " << line << "\n";
}

json config_json(const RunConfig& cfg) {
  json j = json::object();
  for (const auto& line : echo_config(cfg)) {
    const auto eq = line.find(" = ");
    j[line.substr(0, eq)] = line.substr(eq + 3);
  }
  j["defaults_applied"] = cfg.all_defaults;
  return j;
}

// Runs `body` writing to the configured file or to `out`.
int with_output(const std::string& path, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    out.flush();
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: io: cannot open output '" << path << "'\n";
    return kExitIoError;
  }
  body(file);
  file.flush();
  if (!file) {
    err << "error: io: write to '" << path << "' failed\n";
    return kExitIoError;
  }
  return kExitOk;
}

struct Loaded {
  RunConfig cfg;
  int status = kExitOk;
};

Loaded load(const CliOptions& opts, std::ostream& err) {
  Loaded l;
  try {
    l.cfg = load_config(opts.config_path);
    if (opts.out_path) l.cfg.out_path = *opts.out_path;
    if (opts.format) l.cfg.format = *opts.format;
    if (opts.seed) l.cfg.sweep.seed = *opts.seed;
    if (opts.trials) l.cfg.sweep.trials = *opts.trials;
    l.cfg.sweep.validate();
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    l.status = kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: config: " << e.what() << "\n";
    l.status = kExitConfigError;
  } catch (const std::ios_base::failure& e) {
    err << "error: io: " << e.what() << "\n";
    l.status = kExitIoError;
  }
  return l;
}

}  // namespace

std::string format_float(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const SweepResult& r) {
  write_header(os, kSweepSchema, "simulate", cfg);
  os << "# es_dominance: " << r.dominance_violations << " violations in " << r.dominance_checks
     << " checks\n";
  for (const auto& pt : r.points) {
    for (const auto& st : pt.schemes) {
      if (!st.note.empty()) {
        os << "# note: point=" << format_float(pt.point) << " scheme=" << to_string(st.scheme)
           << (st.skipped ? " skipped: " : " flag: ") << st.note << "\n";
      }
    }
  }
  os << "point,scheme,mean_rsum,mean_r1,mean_r2,mean_eta,stderr,trials\n";
  for (const auto& pt : r.points) {
    for (const auto& st : pt.schemes) {
      os << format_float(pt.point) << ',' << to_string(st.scheme) << ','
         << format_float(st.r_sum.mean) << ',' << format_float(st.r1.mean) << ','
         << format_float(st.r2.mean) << ',' << format_float(st.eta.mean) << ','
         << format_float(st.r_sum.std_error) << ',' << st.trials << '\n';
    }
  }
}

void write_sweep_json(std::ostream& os, const RunConfig& cfg, const SweepResult& r) {
  json j;
  j["schema"] = kSweepSchema;
  j["command"] = "simulate";
  j["config_source"] = cfg.source;
  j["config"] = config_json(cfg);
  j["es_dominance"] = {{"checks", r.dominance_checks}, {"violations", r.dominance_violations}};
  json rows = json::array();
  for (const auto& pt : r.points) {
    for (const auto& st : pt.schemes) {
      json row;
      row["point"] = pt.point;
      row["scheme"] = to_string(st.scheme);
      row["mean_rsum"] = number_or_null(st.r_sum.mean);
      row["mean_r1"] = number_or_null(st.r1.mean);
      row["mean_r2"] = number_or_null(st.r2.mean);
      row["mean_eta"] = number_or_null(st.eta.mean);
      row["stderr"] = number_or_null(st.r_sum.std_error);
      row["stderr_eta"] = number_or_null(st.eta.std_error);
      row["trials"] = st.trials;
      if (st.skipped) row["skipped"] = st.note;
      else if (!st.note.empty()) row["flag"] = st.note;
      rows.push_back(std::move(row));
    }
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << "\n";
}

std::vector<AnalysisRow> analyze_sweep(const SweepSpec& spec) {
  std::vector<AnalysisRow> rows;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (double point : spec.points) {
    AnalysisRow row;
    row.point = point;
    try {
      const SystemParams p = params_at(spec, point);
      row.low_snr = low_snr_warning(p);
      const AiaDistribution aia(p);
      row.aia_closed = aia.avg_sum_rate();
      row.a3_closed = avg_sum_rate_a3(p);
      row.aia_quadrature = quadrature_avg_rate([&](double x) { return aia.pdf(x); }, p);
      row.a3_quadrature = quadrature_avg_rate([&](double x) { return pdf_gamma_s_a3(x, p); }, p);
      row.aia_rel_gap = std::fabs(row.aia_closed - row.aia_quadrature) / std::fabs(row.aia_closed);
      row.a3_rel_gap = std::fabs(row.a3_closed - row.a3_quadrature) / std::fabs(row.a3_closed);
    } catch (const std::exception& e) {
      row.error = e.what();
      row.aia_closed = row.a3_closed = row.aia_quadrature = row.a3_quadrature = nan;
      row.aia_rel_gap = row.a3_rel_gap = nan;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_analysis_csv(std::ostream& os, const RunConfig& cfg, const std::vector<AnalysisRow>& rows) {
  write_header(os, kAnalysisSchema, "analyze", cfg);
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      os << "# note: point=" << format_float(row.point) << " skipped: " << row.error << "\n";
    }
  }
  os << "point,aia_closed,a3_closed,aia_quadrature,a3_quadrature,aia_rel_gap,a3_rel_gap,low_snr_warning\n";
  for (const auto& row : rows) {
    os << format_float(row.point) << ',' << format_float(row.aia_closed) << ','
       << format_float(row.a3_closed) << ',' << format_float(row.aia_quadrature) << ','
       << format_float(row.a3_quadrature) << ',' << format_float(row.aia_rel_gap) << ','
       << format_float(row.a3_rel_gap) << ',' << (row.low_snr ? 1 : 0) << '\n';
  }
}

void write_analysis_json(std::ostream& os, const RunConfig& cfg, const std::vector<AnalysisRow>& rows) {
  json j;
  j["schema"] = kAnalysisSchema;
  j["command"] = "analyze";
  j["config_source"] = cfg.source;
  j["config"] = config_json(cfg);
  json arr = json::array();
  for (const auto& row : rows) {
    json r;
    r["point"] = row.point;
    r["aia_closed"] = number_or_null(row.aia_closed);
    r["a3_closed"] = number_or_null(row.a3_closed);
    r["aia_quadrature"] = number_or_null(row.aia_quadrature);
    r["a3_quadrature"] = number_or_null(row.a3_quadrature);
    r["aia_rel_gap"] = number_or_null(row.aia_rel_gap);
    r["a3_rel_gap"] = number_or_null(row.a3_rel_gap);
    r["low_snr_warning"] = row.low_snr;
    if (!row.error.empty()) r["skipped"] = row.error;
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  os << j.dump(2) << "\n";
}

void write_gnuplot(std::ostream& os, const RunConfig& cfg, const std::string& csv_path) {
  const char* xlabel = "x";
  switch (cfg.sweep.axis) {
    case SweepAxis::PsDbm: xlabel = "P_s (dBm)"; break;
    case SweepAxis::NBs: xlabel = "N (BS antennas)"; break;
    case SweepAxis::D2: xlabel = "d_2 (m)"; break;
    case SweepAxis::BCoeff: xlabel = "b"; break;
  }
  os << "# generated by antsel; plots mean_rsum per scheme from " << csv_path << "\n";
  os << "set datafile separator ','\n";
  os << "set datafile commentschars '#'\n";
  os << "set key left top\n";
  os << "set xlabel '" << xlabel << "'\n";
  os << "set ylabel 'average sum rate (bits/s/Hz)'\n";
  os << "plot \\\n";
  for (std::size_t i = 0; i < cfg.sweep.schemes.size(); ++i) {
    const char* name = to_string(cfg.sweep.schemes[i]);
    os << "  '" << csv_path << "' using 1:(strcol(2) eq '" << name << "' ? $3 : 1/0) "
       << "with linespoints title '" << name << "'" << (i + 1 < cfg.sweep.schemes.size() ? ", \\" : "")
       << "\n";
  }
}

int cmd_simulate(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  Loaded l = load(opts, err);
  if (l.status != kExitOk) return l.status;
  SweepResult result;
  try {
    result = run_sweep(l.cfg.sweep, opts.workers);
  } catch (const std::exception& e) {
    err << "error: config: " << e.what() << "\n";
    return kExitConfigError;
  }
  const int rc = with_output(l.cfg.out_path, out, err, [&](std::ostream& os) {
    if (l.cfg.format == OutputFormat::Json) write_sweep_json(os, l.cfg, result);
    else write_sweep_csv(os, l.cfg, result);
  });
  if (rc != kExitOk || opts.gnuplot_path.empty()) return rc;
  const std::string data = l.cfg.out_path.empty() ? "sweep.csv" : l.cfg.out_path;
  return with_output(opts.gnuplot_path, out, err,
                     [&](std::ostream& os) { write_gnuplot(os, l.cfg, data); });
}

int cmd_analyze(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  Loaded l = load(opts, err);
  if (l.status != kExitOk) return l.status;
  const auto rows = analyze_sweep(l.cfg.sweep);
  return with_output(l.cfg.out_path, out, err, [&](std::ostream& os) {
    if (l.cfg.format == OutputFormat::Json) write_analysis_json(os, l.cfg, rows);
    else write_analysis_csv(os, l.cfg, rows);
  });
}

int cmd_validate(std::ostream& out, std::ostream& err) {
  const auto checks = validation::run_all();
  const validation::CheckResult* first_failure = nullptr;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    if (!c.passed && !first_failure) first_failure = &c;
  }
  if (first_failure) {
    err << "error: validate: " << first_failure->name << " failed\n";
    return kExitValidationFailed;
  }
  return kExitOk;
}

}  // namespace antsel::cli
