#include "cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/run_config.hpp"

namespace geab::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct FlagSpec {
  const char* key;
  const char* help;
};

const FlagSpec kFlags[] = {
    {"scenario", "solenoid or tube"},
    {"A", "Podolsky ratio a/R (exclusive with --R-metres)"},
    {"a-metres", "Podolsky length a in metres (default 1e-18)"},
    {"R-metres", "device radius R in metres; enables SI output"},
    {"n-per-metre", "solenoid turns per metre"},
    {"current-A", "solenoid current in amperes"},
    {"sigma", "tube surface charge in C/m^2"},
    {"s-min", "first radius S = r/R"},
    {"s-max", "last radius S = r/R"},
    {"s-count", "number of radii"},
    {"method", "auto, exact, large_ratio, asymptotic or expansion"},
    {"quantity", "b_z, a_phi, e_r or phi"},
    {"format", "csv or json"},
    {"out", "output file (default stdout)"},
    {"jobs", "worker threads (default: hardware concurrency)"},
    {"charge", "beam particle charge in coulombs (default -e)"},
    {"time", "beam transit time in seconds"},
    {"S", "beam radius for the magnetic phase"},
    {"S1", "first beam radius inside the tube"},
    {"S2", "second beam radius inside the tube"},
    {"maxwell-dphi", "Maxwell potential difference between the beams"},
    {"A-min", "smallest A of a sweep"},
    {"A-max", "largest A of a sweep"},
    {"A-count", "number of A values in a sweep"},
    {"level", "verification level: fast or full"},
};

int emit(const Table& table, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.out.empty()) {
    write_table(table, cfg.format, out);
    return 0;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << cfg.out << "'\n";
    return kExitFailure;
  }
  write_table(table, cfg.format, f);
  return f ? 0 : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Podolsky electrodynamics: fields, potentials and Aharonov-Bohm phases", "geab"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_options;
  for (const auto& f : kFlags) flag_options[f.key] = app.add_option(std::string("--") + f.key, flag_values[f.key], f.help);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (overrides $GEAB_CONFIG)");

  auto* profile = app.add_subcommand("profile", "sample a normalized field or potential over S");
  auto* phase = app.add_subcommand("phase", "Aharonov-Bohm phase for one configuration");
  auto* sweep = app.add_subcommand("sweep", "phase correction over a logarithmic range of A");
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  for (auto* sub : {profile, phase, sweep, verify_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  RunConfig cfg;
  try {
    Settings settings;
    if (config_path.empty())
      if (const char* env = std::getenv(config_env_var); env && *env) config_path = env;
    if (!config_path.empty()) settings = load_config_file(config_path);
    for (const auto& [key, opt] : flag_options)
      if (opt->count() > 0) settings[key] = flag_values[key];
    cfg = build_run_config(settings, !verify_cmd->parsed() && !sweep->parsed());
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (profile->parsed()) return emit(cmd_profile(cfg), cfg, out, err);
    if (phase->parsed()) return emit(cmd_phase(cfg), cfg, out, err);
    if (sweep->parsed()) return emit(cmd_sweep(cfg), cfg, out, err);
    const auto report = verify::run_verification(cfg.level == "full" ? verify::Level::full : verify::Level::fast);
    const int rc = emit(verify_table(report), cfg, out, err);
    if (rc != 0) return rc;
    if (!report.all_passed()) {
      err << report.failures() << " verification check(s) failed\n";
      return kExitFailure;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace geab::cli
