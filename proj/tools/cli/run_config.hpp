#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/table.hpp"
#include "geab/profile.hpp"

namespace geab::cli {

/// Bad configuration: malformed file line, unknown key or invalid field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { solenoid, tube };

/// Raw key=value settings before typing. Keys are the long flag names
/// without leading dashes ("A", "R-metres", "s-count", ...).
using Settings = std::map<std::string, std::string>;

/// Keys understood by the config file and the command line.
const std::vector<std::string>& known_keys();

/// Parses flat key=value text. Blank lines and lines starting with '#' are
/// skipped. Throws ConfigError naming the source and line for malformed
/// lines, unknown keys and repeated keys.
Settings parse_config_text(const std::string& text, const std::string& source_name);
Settings load_config_file(const std::string& path);

struct RunConfig {
  Scenario scenario = Scenario::solenoid;
  double A = 0.0;
  /// Set when the scale came from SI lengths; enables SI outputs.
  std::optional<double> R_metres;
  double a_metres = 0.0;
  double turns_per_metre = 1.0e4;
  double current_A = 1.0;
  double sigma_C_per_m2 = 1.0e-9;
  double s_min = 0.0;
  double s_max = 3.0;
  std::size_t s_count = 301;
  Method method = Method::auto_select;
  std::optional<Quantity> quantity;
  Format format = Format::csv;
  std::string out;
  unsigned jobs = 1;
  double charge_C = 0.0;
  double transit_time_s = 1.0e-8;
  /// Beam radius for the magnetic phase.
  double S = 1.0;
  double S1 = 0.0;
  double S2 = 0.5;
  double maxwell_delta_phi_V = 0.0;
  double A_min = 1.0e-3;
  double A_max = 0.2;
  std::size_t A_count = 10;
  std::string level = "fast";

  bool si_mode() const { return R_metres.has_value(); }
  Quantity effective_quantity() const;
};

/// Types and checks merged settings. Exactly one of A or R-metres must be
/// present (a-metres defaults to the SI Podolsky length). Throws ConfigError
/// naming the offending field. require_scale=false skips the scale check
/// (used by verify and sweep).
RunConfig build_run_config(const Settings& settings, bool require_scale = true);

}  // namespace geab::cli
