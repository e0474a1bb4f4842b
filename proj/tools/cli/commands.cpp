#include "cli/commands.hpp"

#include <cmath>
#include <numbers>

#include "cli/worker_pool.hpp"
#include "geab/electric.hpp"
#include "geab/errors.hpp"
#include "geab/magnetic.hpp"

namespace geab::cli {

namespace {

constexpr double kPi = std::numbers::pi;
// Beyond this zeta the interior hypergeometric form is not representable.
constexpr double kExactPotentialMaxZeta = 700.0;

magnetic::PhaseBranch magnetic_branch(Method m) {
  switch (m) {
    case Method::auto_select:
    case Method::asymptotic: return magnetic::PhaseBranch::asymptotic;
    case Method::exact: return magnetic::PhaseBranch::exact;
    default: break;
  }
  throw InvalidMethod("magnetic phase: method '" + std::string(to_string(m)) + "' not available");
}

electric::PotentialMethod electric_method(Method m, double A, double S1, double S2) {
  switch (m) {
    case Method::auto_select:
      return std::max(S1, S2) / A <= kExactPotentialMaxZeta ? electric::PotentialMethod::exact
                                                            : electric::PotentialMethod::asymptotic;
    case Method::exact: return electric::PotentialMethod::exact;
    case Method::expansion: return electric::PotentialMethod::expansion;
    case Method::asymptotic: return electric::PotentialMethod::asymptotic;
    default: break;
  }
  throw InvalidMethod("electric phase: method '" + std::string(to_string(m)) + "' not available");
}

std::string branch_name(magnetic::PhaseBranch b) { return b == magnetic::PhaseBranch::exact ? "exact" : "asymptotic"; }

std::string branch_name(electric::PotentialMethod m) {
  switch (m) {
    case electric::PotentialMethod::exact: return "exact";
    case electric::PotentialMethod::expansion: return "expansion";
    case electric::PotentialMethod::asymptotic: return "asymptotic";
  }
  return "exact";
}

magnetic::PhaseRatio magnetic_ratio(double S, PodolskyScale scale, magnetic::PhaseBranch b) {
  const RadialPoint p = RadialPoint::at(S);
  return b == magnetic::PhaseBranch::exact ? magnetic::delta_g_ratio_exact(p, scale)
                                           : magnetic::delta_g_ratio(p, scale);
}

Table solenoid_phase(const RunConfig& cfg) {
  Table t{{"scenario", "A", "S", "maxwell_phase", "ge_correction", "ratio", "total_phase", "branch", "units"}, {}};
  const auto branch = magnetic_branch(cfg.method);
  if (cfg.si_mode()) {
    const magnetic::SolenoidConfig sol{*cfg.R_metres, cfg.turns_per_metre, cfg.current_A, cfg.a_metres};
    const auto r = magnetic::delta_g_magnetic_si(sol, cfg.charge_C, cfg.S * *cfg.R_metres, branch);
    t.add_row({std::string("solenoid"), cfg.A, cfg.S, r.maxwell_phase, r.delta_g_correction, r.ge_ratio,
               r.total_phase(), branch_name(branch), std::string("SI")});
  } else {
    const auto r = magnetic_ratio(cfg.S, PodolskyScale(cfg.A), branch);
    // Flux of the unit field through the unit disc.
    t.add_row({std::string("solenoid"), cfg.A, cfg.S, kPi, r.correction, r.ratio, kPi * r.ratio, branch_name(branch),
               std::string("normalized")});
  }
  return t;
}

Table tube_phase(const RunConfig& cfg) {
  Table t{{"scenario", "A", "S1", "S2", "maxwell_delta_phi", "podolsky_delta_phi", "maxwell_phase",
           "podolsky_phase", "total_phase", "branch", "units"},
          {}};
  const electric::BeamPairGeometry g{cfg.S1, cfg.S2, cfg.transit_time_s, cfg.charge_C};
  const auto method = electric_method(cfg.method, cfg.A, cfg.S1, cfg.S2);
  if (cfg.si_mode()) {
    const electric::TubeConfig tube{*cfg.R_metres, cfg.sigma_C_per_m2, cfg.a_metres};
    const auto r = electric::delta_g_electric_si(tube, g, cfg.maxwell_delta_phi_V, method);
    t.add_row({std::string("tube"), cfg.A, cfg.S1, cfg.S2, r.maxwell_delta_phi_V, r.podolsky_delta_phi_V,
               r.maxwell_phase, r.podolsky_phase, r.total_phase(), branch_name(method), std::string("SI")});
  } else {
    g.validate();
    const double dphi = electric::delta_phi_podolsky(g, PodolskyScale(cfg.A), method);
    // Phase in units of q t sigma R / (eps0 hbar).
    const double mphase = 0.0 - cfg.maxwell_delta_phi_V;
    t.add_row({std::string("tube"), cfg.A, cfg.S1, cfg.S2, cfg.maxwell_delta_phi_V, dphi, mphase, -dphi,
               mphase - dphi, branch_name(method), std::string("normalized")});
  }
  return t;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  if (n > 1) out.back() = hi;
  return out;
}

}  // namespace

Table cmd_profile(const RunConfig& cfg) {
  const PodolskyScale scale(cfg.A);
  const Quantity q = cfg.effective_quantity();
  const auto S = linspace(cfg.s_min, cfg.s_max, cfg.s_count);
  const auto samples = parallel_map<ProfileSample>(
      S.size(), cfg.jobs, [&](std::size_t i) { return sample_point(q, scale, S[i], cfg.method); });
  Table t{{"S", "value", "region", "branch"}, {}};
  for (const auto& s : samples) t.add_row({s.S, s.value, std::string(to_string(s.region)), s.branch});
  return t;
}

Table cmd_phase(const RunConfig& cfg) {
  return cfg.scenario == Scenario::solenoid ? solenoid_phase(cfg) : tube_phase(cfg);
}

Table cmd_sweep(const RunConfig& cfg) {
  const auto As = log_grid(cfg.A_min, cfg.A_max, cfg.A_count);
  if (cfg.scenario == Scenario::solenoid) {
    const auto branch = magnetic_branch(cfg.method);
    const auto rows = parallel_map<magnetic::PhaseRatio>(
        As.size(), cfg.jobs, [&](std::size_t i) { return magnetic_ratio(cfg.S, PodolskyScale(As[i]), branch); });
    Table t{{"A", "S", "ge_correction", "ratio", "branch"}, {}};
    for (std::size_t i = 0; i < As.size(); ++i)
      t.add_row({As[i], cfg.S, rows[i].correction, rows[i].ratio, branch_name(branch)});
    return t;
  }
  const electric::BeamPairGeometry g{cfg.S1, cfg.S2, cfg.transit_time_s, cfg.charge_C};
  g.validate();
  std::vector<electric::PotentialMethod> methods;
  for (double A : As) methods.push_back(electric_method(cfg.method, A, cfg.S1, cfg.S2));
  const auto rows = parallel_map<double>(As.size(), cfg.jobs, [&](std::size_t i) {
    return electric::delta_phi_podolsky(g, PodolskyScale(As[i]), methods[i]);
  });
  Table t{{"A", "S1", "S2", "podolsky_delta_phi", "branch"}, {}};
  for (std::size_t i = 0; i < As.size(); ++i) t.add_row({As[i], cfg.S1, cfg.S2, rows[i], branch_name(methods[i])});
  return t;
}

Table verify_table(const verify::Report& report) {
  Table t{{"level", "module", "name", "observed", "tolerance", "passed"}, {}};
  const std::string level = report.level == verify::Level::fast ? "fast" : "full";
  for (const auto& c : report.checks)
    t.add_row({level, c.module, c.name, c.observed, c.tolerance, std::string(c.passed ? "true" : "false")});
  return t;
}

}  // namespace geab::cli
