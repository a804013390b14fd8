#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ceit/errors.hpp"

namespace ceit::cli {

namespace {

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidParams("config: bad numeric value for '" + key + "': " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidParams("config: bad integer value for '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw InvalidParams("config: bad boolean value for '" + key + "': " + value);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "g") cfg.params.g = parse_double(key, value);
  else if (key == "gamma13") cfg.params.gamma13 = parse_double(key, value);
  else if (key == "gamma23") cfg.params.gamma23 = parse_double(key, value);
  else if (key == "omega") cfg.params.omega = parse_double(key, value);
  else if (key == "eta") cfg.params.eta = parse_double(key, value);
  else if (key == "delta_c") cfg.params.delta_c = parse_double(key, value);
  else if (key == "u0") cfg.params.u0 = parse_double(key, value);
  else if (key == "g_units") cfg.g_units = parse_bool(key, value);
  else if (key == "engines") {
    cfg.engine_mfa = value.find("mfa") != std::string::npos;
    cfg.engine_qme = value.find("qme") != std::string::npos;
    if (!cfg.engine_mfa && !cfg.engine_qme)
      throw InvalidParams("config: engines must include mfa and/or qme");
  }
  else if (key == "range_lo") cfg.range_lo = parse_double(key, value);
  else if (key == "range_hi") cfg.range_hi = parse_double(key, value);
  else if (key == "range2_lo") cfg.range2_lo = parse_double(key, value);
  else if (key == "range2_hi") cfg.range2_hi = parse_double(key, value);
  else if (key == "resolution") cfg.resolution = parse_int(key, value);
  else if (key == "resolution2") cfg.resolution2 = parse_int(key, value);
  else if (key == "cutoff_start") cfg.cutoff.start = parse_int(key, value);
  else if (key == "cutoff_growth") cfg.cutoff.growth = parse_int(key, value);
  else if (key == "cutoff_cap") cfg.cutoff.cap = parse_int(key, value);
  else if (key == "top_population_threshold")
    cfg.cutoff.top_population_threshold = parse_double(key, value);
  else if (key == "threads") cfg.threads = parse_int(key, value);
  else if (key == "qme_cell_budget") cfg.qme_cell_budget = parse_int(key, value);
  else if (key == "tau_max") cfg.tau_max = parse_double(key, value);
  else if (key == "tau_points") cfg.tau_points = parse_int(key, value);
  else if (key == "out_dir") cfg.out_dir = value;
  else throw InvalidParams("config: unknown key '" + key + "'");
}

RunConfig load_config(const std::optional<std::string>& path,
                      const std::vector<std::string>& overrides) {
  RunConfig cfg;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw InvalidParams("config: cannot open " + *path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos) {
        std::ostringstream msg;
        msg << "config: " << *path << ":" << lineno << ": expected key=value";
        throw InvalidParams(msg.str());
      }
      apply_key(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
  }
  for (const auto& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw InvalidParams("config: --set expects KEY=VALUE, got '" + ov + "'");
    apply_key(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
  }
  cfg.params.validate();
  return cfg;
}

}  // namespace ceit::cli
