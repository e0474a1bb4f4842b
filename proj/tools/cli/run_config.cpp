#include "cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "geab/errors.hpp"
#include "geab/units.hpp"

namespace geab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const Settings& s, const std::string& key, double fallback) {
  const auto it = s.find(key);
  if (it == s.end()) return fallback;
  const std::string& text = it->second;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    throw ConfigError("field '" + key + "': expected a finite number, got '" + text + "'");
  return v;
}

long long to_integer(const Settings& s, const std::string& key, long long fallback) {
  const auto it = s.find(key);
  if (it == s.end()) return fallback;
  const std::string& text = it->second;
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("field '" + key + "': expected an integer, got '" + text + "'");
  return v;
}

std::string to_string_or(const Settings& s, const std::string& key, const std::string& fallback) {
  const auto it = s.find(key);
  return it == s.end() ? fallback : it->second;
}

template <class F>
auto field(const std::string& key, F&& parse) {
  try {
    return parse();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("field '" + key + "': " + e.what());
  }
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "scenario", "A",      "a-metres", "R-metres", "n-per-metre", "current-A", "sigma",   "s-min",
      "s-max",    "s-count", "method",  "quantity", "format",      "out",       "jobs",    "charge",
      "time",     "S",      "S1",     "S2",       "maxwell-dphi", "A-min",   "A-max",     "A-count", "level"};
  return keys;
}

Settings parse_config_text(const std::string& text, const std::string& source_name) {
  Settings out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  const auto& keys = known_keys();
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = source_name + ":" + std::to_string(number) + ": ";
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key=value, got '" + t + "'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + "missing key before '='");
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(where + "unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(where + "empty value for '" + key + "'");
    if (!out.emplace(key, value).second) throw ConfigError(where + "key '" + key + "' given twice");
  }
  return out;
}

Settings load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str(), path);
}

Quantity RunConfig::effective_quantity() const {
  if (quantity) return *quantity;
  return scenario == Scenario::solenoid ? Quantity::b_z : Quantity::e_r;
}

RunConfig build_run_config(const Settings& s, bool require_scale) {
  RunConfig c;
  const std::string scenario = to_string_or(s, "scenario", "solenoid");
  if (scenario == "solenoid")
    c.scenario = Scenario::solenoid;
  else if (scenario == "tube")
    c.scenario = Scenario::tube;
  else
    throw ConfigError("field 'scenario': expected solenoid or tube, got '" + scenario + "'");

  const bool has_A = s.count("A") > 0;
  const bool has_R = s.count("R-metres") > 0;
  const bool has_a = s.count("a-metres") > 0;
  if (has_A && (has_R || has_a))
    throw ConfigError("field 'A': give either A or the (a-metres, R-metres) pair, not both");
  if (has_a && !has_R) throw ConfigError("field 'R-metres': required when a-metres is given");
  if (has_A) {
    c.A = to_double(s, "A", 0.0);
    if (!(c.A > 0.0 && c.A < 1.0)) throw ConfigError("field 'A': must lie in (0, 1)");
  } else if (has_R) {
    const double R = to_double(s, "R-metres", 0.0);
    c.a_metres = to_double(s, "a-metres", si::default_podolsky_length);
    if (!(R > 0.0)) throw ConfigError("field 'R-metres': must be positive");
    if (!(c.a_metres > 0.0)) throw ConfigError("field 'a-metres': must be positive");
    c.R_metres = R;
    c.A = c.a_metres / R;
    if (!(c.A < 1.0)) throw ConfigError("field 'a-metres': a/R must be < 1");
  } else if (require_scale) {
    throw ConfigError("field 'A': one of A or R-metres (with optional a-metres) is required");
  }

  c.turns_per_metre = to_double(s, "n-per-metre", c.turns_per_metre);
  c.current_A = to_double(s, "current-A", c.current_A);
  c.sigma_C_per_m2 = to_double(s, "sigma", c.sigma_C_per_m2);
  c.s_min = to_double(s, "s-min", c.s_min);
  c.s_max = to_double(s, "s-max", c.s_max);
  const long long count = to_integer(s, "s-count", static_cast<long long>(c.s_count));
  if (count < 1) throw ConfigError("field 's-count': must be >= 1");
  c.s_count = static_cast<std::size_t>(count);
  if (c.s_min < 0.0) throw ConfigError("field 's-min': must be >= 0");
  if (c.s_max < c.s_min || (c.s_max == c.s_min && c.s_count > 1))
    throw ConfigError("field 's-max': S range is empty (s-max must exceed s-min)");

  c.method = field("method", [&] { return parse_method(to_string_or(s, "method", "auto")); });
  if (s.count("quantity")) c.quantity = field("quantity", [&] { return parse_quantity(s.at("quantity")); });
  c.format = field("format", [&] { return parse_format(to_string_or(s, "format", "csv")); });
  c.out = to_string_or(s, "out", "");

  const long long default_jobs = std::max(1u, std::thread::hardware_concurrency());
  const long long jobs = to_integer(s, "jobs", default_jobs);
  if (jobs < 1 || jobs > 1024) throw ConfigError("field 'jobs': must be between 1 and 1024");
  c.jobs = static_cast<unsigned>(jobs);

  c.charge_C = to_double(s, "charge", -si::elementary_charge);
  c.transit_time_s = to_double(s, "time", c.transit_time_s);
  c.S = to_double(s, "S", c.S);
  c.S1 = to_double(s, "S1", c.S1);
  c.S2 = to_double(s, "S2", c.S2);
  c.maxwell_delta_phi_V = to_double(s, "maxwell-dphi", c.maxwell_delta_phi_V);
  c.A_min = to_double(s, "A-min", c.A_min);
  c.A_max = to_double(s, "A-max", c.A_max);
  const long long a_count = to_integer(s, "A-count", static_cast<long long>(c.A_count));
  if (a_count < 1) throw ConfigError("field 'A-count': must be >= 1");
  c.A_count = static_cast<std::size_t>(a_count);
  if (!(c.A_min > 0.0 && c.A_max < 1.0 && c.A_min <= c.A_max))
    throw ConfigError("field 'A-min': need 0 < A-min <= A-max < 1");
  c.level = to_string_or(s, "level", c.level);
  if (c.level != "fast" && c.level != "full") throw ConfigError("field 'level': expected fast or full");
  return c;
}

}  // namespace geab::cli
