#include "cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace antsel::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Drops a "; ..." or "# ..." comment that starts the value or follows whitespace.
std::string strip_inline_comment(const std::string& raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if ((raw[i] == ';' || raw[i] == '#') && (i == 0 || raw[i - 1] == ' ' || raw[i - 1] == '\t')) {
      return trim(raw.substr(0, i));
    }
  }
  return trim(raw);
}

double to_double(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a number, got '" + raw + "'");
  }
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError(key + ": expected a nonnegative integer, got '" + raw + "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& raw) {
  const std::uint64_t v = to_u64(key, raw);
  if (v > 1'000'000) throw ConfigError(key + ": value out of range");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  return out;
}

std::string fmt_g(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

}  // namespace

RunConfig default_run_config() {
  RunConfig cfg;
  cfg.sweep.axis = SweepAxis::PsDbm;
  cfg.sweep.points = {0, 5, 10, 15, 20, 25, 30, 35, 40};
  cfg.sweep.trials = 100'000;
  cfg.sweep.seed = 2024;
  cfg.sweep.schemes.assign(std::begin(kAllSchemes), std::end(kAllSchemes));
  return cfg;
}

std::vector<double> parse_points(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("sweep.points: empty list");
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) throw ConfigError("sweep.points: range must be start:step:stop");
    const double start = to_double("sweep.points", parts[0]);
    const double step = to_double("sweep.points", parts[1]);
    const double stop = to_double("sweep.points", parts[2]);
    if (step == 0.0 || (stop - start) / step < 0.0) {
      throw ConfigError("sweep.points: step does not reach stop");
    }
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    if (n > 100'000) throw ConfigError("sweep.points: too many points");
    std::vector<double> pts;
    for (long i = 0; i <= n; ++i) pts.push_back(start + static_cast<double>(i) * step);
    return pts;
  }
  std::vector<double> pts;
  for (const auto& item : split(t, ',')) pts.push_back(to_double("sweep.points", item));
  return pts;
}

RunConfig parse_config(std::istream& in, const std::string& source_name) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()) + ": " + e.message());
  }

  RunConfig cfg = default_run_config();
  cfg.source = source_name;
  cfg.all_defaults = true;

  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key '" + section + "' must appear inside a [section]");
    }
    if (section != "scenario" && section != "sweep" && section != "output") {
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, node] : body) {
      const std::string full = section + "." + key;
      const std::string value = strip_inline_comment(node.get_value<std::string>());
      cfg.all_defaults = false;
      auto& sc = cfg.sweep.base;
      if (section == "scenario") {
        if (key == "n_bs") sc.n_bs = to_int(full, value);
        else if (key == "n_ue1") sc.n_ue1 = to_int(full, value);
        else if (key == "n_ue2") sc.n_ue2 = to_int(full, value);
        else if (key == "d1") sc.d1 = to_double(full, value);
        else if (key == "d2") sc.d2 = to_double(full, value);
        else if (key == "alpha") sc.alpha = to_double(full, value);
        else if (key == "b") sc.b = to_double(full, value);
        else if (key == "ps_dbm") sc.ps_dbm = to_double(full, value);
        else if (key == "sigma_dbm") sc.sigma_dbm = to_double(full, value);
        else throw ConfigError("unknown key '" + full + "'");
      } else if (section == "sweep") {
        if (key == "axis") {
          const auto axis = parse_axis(trim(value));
          if (!axis) throw ConfigError(full + ": unknown axis '" + value + "'");
          cfg.sweep.axis = *axis;
        } else if (key == "points") {
          cfg.sweep.points = parse_points(value);
        } else if (key == "trials") {
          cfg.sweep.trials = to_u64(full, value);
        } else if (key == "seed") {
          cfg.sweep.seed = to_u64(full, value);
        } else if (key == "schemes") {
          cfg.sweep.schemes.clear();
          for (const auto& name : split(value, ',')) {
            const auto s = parse_scheme(name);
            if (!s) throw ConfigError(full + ": unknown scheme '" + name + "'");
            cfg.sweep.schemes.push_back(*s);
          }
        } else {
          throw ConfigError("unknown key '" + full + "'");
        }
      } else if (section == "output") {
        if (key == "format") {
          const std::string f = trim(value);
          if (f == "csv") cfg.format = OutputFormat::Csv;
          else if (f == "json") cfg.format = OutputFormat::Json;
          else throw ConfigError(full + ": expected csv or json");
        } else if (key == "path") {
          cfg.out_path = trim(value);
        } else if (key == "verbosity") {
          cfg.verbosity = to_int(full, value);
        } else {
          throw ConfigError("unknown key '" + full + "'");
        }
      } else {
        throw ConfigError("unknown section [" + section + "]");
      }
    }
  }

  if (cfg.sweep.trials > 10'000'000) throw ConfigError("sweep.trials: at most 10000000");
  try {
    cfg.sweep.validate();
    for (double p : cfg.sweep.points) (void)params_at(cfg.sweep, p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  if (path.empty()) return default_run_config();
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config '" + path + "'");
  return parse_config(in, path);
}

std::vector<std::string> echo_config(const RunConfig& cfg) {
  const auto& sc = cfg.sweep.base;
  std::vector<std::string> lines;
  lines.push_back("scenario.n_bs = " + std::to_string(sc.n_bs));
  lines.push_back("scenario.n_ue1 = " + std::to_string(sc.n_ue1));
  lines.push_back("scenario.n_ue2 = " + std::to_string(sc.n_ue2));
  lines.push_back("scenario.d1 = " + fmt_g(sc.d1));
  lines.push_back("scenario.d2 = " + fmt_g(sc.d2));
  lines.push_back("scenario.alpha = " + fmt_g(sc.alpha));
  lines.push_back("scenario.b = " + fmt_g(sc.b));
  lines.push_back("scenario.ps_dbm = " + fmt_g(sc.ps_dbm));
  lines.push_back("scenario.sigma_dbm = " + fmt_g(sc.sigma_dbm));
  lines.push_back(std::string("sweep.axis = ") + to_string(cfg.sweep.axis));
  std::string pts;
  for (double p : cfg.sweep.points) pts += (pts.empty() ? "" : ", ") + fmt_g(p);
  lines.push_back("sweep.points = " + pts);
  lines.push_back("sweep.trials = " + std::to_string(cfg.sweep.trials));
  lines.push_back("sweep.seed = " + std::to_string(cfg.sweep.seed));
  std::string schemes;
  for (Scheme s : cfg.sweep.schemes) schemes += (schemes.empty() ? "" : ", ") + std::string(to_string(s));
  lines.push_back("sweep.schemes = " + schemes);
  return lines;
}

}  // namespace antsel::cli
