#include "geab/magnetic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "geab/errors.hpp"
#include "geab/specfun.hpp"
#include "geab/units.hpp"

namespace geab::magnetic {

using specfun::bessel_i;
using specfun::bessel_k;

namespace {

void check_S(double S, const char* who) {
  if (!std::isfinite(S) || S < 0.0) throw DomainError(std::string(who) + ": S must be finite and >= 0");
}

void check_positive_S(double S, const char* who) {
  if (!std::isfinite(S) || S <= 0.0) throw DomainError(std::string(who) + ": S must be finite and > 0");
}

// Interior branch covers the surface.
bool inside_branch(RadialPoint p) {
  if (!std::isfinite(p.S) || p.S < 0.0) throw DomainError("RadialPoint: S must be finite and >= 0");
  if ((p.region == Region::inside && p.S > 1.0) || (p.region == Region::outside && p.S < 1.0) ||
      (p.region == Region::surface && p.S != 1.0))
    throw DomainError("RadialPoint: region tag inconsistent with S");
  return p.region != Region::outside;
}

void check_outside(RadialPoint p, const char* who) {
  inside_branch(p);
  if (p.S < 1.0) throw DomainError(std::string(who) + ": requires S >= 1 (beam outside the solenoid)");
}

}  // namespace

std::vector<std::string> SolenoidConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(radius_m)) throw DomainError("SolenoidConfig: R must be positive");
  if (!positive(turns_per_m)) throw DomainError("SolenoidConfig: n must be positive");
  if (!positive(podolsky_length_m)) throw DomainError("SolenoidConfig: a must be positive");
  if (!std::isfinite(current_A)) throw DomainError("SolenoidConfig: I must be finite");
  const double A = podolsky_length_m / radius_m;
  if (A >= 1.0) throw DomainError("SolenoidConfig: A = a/R must be < 1");
  std::vector<std::string> warnings;
  if (A >= 0.5) warnings.emplace_back("A = a/R >= 0.5: large-R/a approximations are not meaningful");
  return warnings;
}

PodolskyScale SolenoidConfig::scale() const { return PodolskyScale::from_lengths(podolsky_length_m, radius_m); }

double b_eff(RadialPoint p) { return inside_branch(p) ? 1.0 : 0.0; }

double b_z_inside(double S, PodolskyScale scale) {
  check_S(S, "b_z_inside");
  const double z0 = scale.surface_zeta();
  return 1.0 - (bessel_k(1, z0) * bessel_i(0, scale.zeta(S)) * z0).value();
}

double b_z_outside(double S, PodolskyScale scale) {
  check_positive_S(S, "b_z_outside");
  const double z0 = scale.surface_zeta();
  return (bessel_i(1, z0) * bessel_k(0, scale.zeta(S)) * z0).value();
}

double b_z_slope_inside(double S, PodolskyScale scale) {
  check_S(S, "b_z_slope_inside");
  const double z0 = scale.surface_zeta();
  return -(bessel_k(1, z0) * bessel_i(1, scale.zeta(S)) * (z0 * z0)).value();
}

double b_z_slope_outside(double S, PodolskyScale scale) {
  check_positive_S(S, "b_z_slope_outside");
  const double z0 = scale.surface_zeta();
  return -(bessel_i(1, z0) * bessel_k(1, scale.zeta(S)) * (z0 * z0)).value();
}

double b_z(RadialPoint p, PodolskyScale scale) {
  return inside_branch(p) ? b_z_inside(p.S, scale) : b_z_outside(p.S, scale);
}

Approximation b_z_approx(RadialPoint p, PodolskyScale scale) {
  const double A = scale.A();
  const bool valid = p.S > 2.0 * A;
  if (inside_branch(p)) return {1.0 - 0.5 / std::sqrt(p.S) * std::exp(-(1.0 - p.S) / A), valid};
  return {0.5 / std::sqrt(p.S) * std::exp(-(p.S - 1.0) / A), valid};
}

double a_phi_inside(double S, PodolskyScale scale) {
  check_S(S, "a_phi_inside");
  const double z0 = scale.surface_zeta();
  return S / 2.0 - (bessel_k(1, z0) * bessel_i(1, scale.zeta(S))).value();
}

double a_phi_outside(double S, PodolskyScale scale) {
  check_positive_S(S, "a_phi_outside");
  const double z0 = scale.surface_zeta();
  return 1.0 / (2.0 * S) - (bessel_i(1, z0) * bessel_k(1, scale.zeta(S))).value();
}

double a_phi_slope_inside(double S, PodolskyScale scale) {
  check_S(S, "a_phi_slope_inside");
  const double z0 = scale.surface_zeta();
  const double zeta = scale.zeta(S);
  // I_1'(zeta) = I_0 - I_1/zeta, with limit 1/2 on the axis.
  const ScaledValue di1 = zeta == 0.0 ? ScaledValue::from_double(0.5)
                                      : bessel_i(0, zeta) - bessel_i(1, zeta) * (1.0 / zeta);
  return 0.5 - (bessel_k(1, z0) * di1 * z0).value();
}

double a_phi_slope_outside(double S, PodolskyScale scale) {
  check_positive_S(S, "a_phi_slope_outside");
  const double z0 = scale.surface_zeta();
  const double zeta = scale.zeta(S);
  // K_1'(zeta) = -K_0 - K_1/zeta.
  const ScaledValue dk1 = -(bessel_k(0, zeta) + bessel_k(1, zeta) * (1.0 / zeta));
  return -1.0 / (2.0 * S * S) - (bessel_i(1, z0) * dk1 * z0).value();
}

double a_phi(RadialPoint p, PodolskyScale scale) {
  return inside_branch(p) ? a_phi_inside(p.S, scale) : a_phi_outside(p.S, scale);
}

Approximation a_phi_approx(RadialPoint p, PodolskyScale scale) {
  const double A = scale.A();
  const bool valid = p.S > 2.0 * A;
  if (inside_branch(p)) return {p.S / 2.0 - A / (2.0 * std::sqrt(p.S)) * std::exp(-(1.0 - p.S) / A), valid};
  return {1.0 / (2.0 * p.S) * (1.0 - A * std::sqrt(p.S) * std::exp(-(p.S - 1.0) / A)), valid};
}

double loop_phase(RadialPoint p, PodolskyScale scale) {
  return 2.0 * std::numbers::pi * p.S * a_phi(p, scale);
}

PhaseRatio delta_g_ratio(RadialPoint p, PodolskyScale scale) {
  check_outside(p, "delta_g_ratio");
  const double A = scale.A();
  const double dg = A * std::sqrt(p.S) * std::exp(-(p.S - 1.0) / A);
  return {1.0 - dg, dg};
}

PhaseRatio delta_g_ratio_exact(RadialPoint p, PodolskyScale scale) {
  check_outside(p, "delta_g_ratio_exact");
  // 2 S a_phi = 1 - 2 S I_1(1/A) K_1(S/A).
  const double dg = (bessel_i(1, scale.surface_zeta()) * bessel_k(1, scale.zeta(p.S)) * (2.0 * p.S)).value();
  return {1.0 - dg, dg};
}

PhaseShiftResult delta_g_magnetic_si(const SolenoidConfig& config, double charge_C, double r_m,
                                     PhaseBranch branch) {
  config.validate();
  if (!std::isfinite(charge_C)) throw DomainError("delta_g_magnetic_si: charge must be finite");
  if (!std::isfinite(r_m) || r_m <= 0.0) throw DomainError("delta_g_magnetic_si: r must be positive");
  if (r_m < config.radius_m) throw DomainError("delta_g_magnetic_si: r must be >= R");
  const double R = config.radius_m;
  PhaseShiftResult out;
  out.maxwell_phase =
      charge_C * si::mu0 * config.turns_per_m * config.current_A * std::numbers::pi * R * R / si::hbar;
  const RadialPoint p = RadialPoint::at(r_m / R);
  const PhaseRatio ratio =
      branch == PhaseBranch::exact ? delta_g_ratio_exact(p, config.scale()) : delta_g_ratio(p, config.scale());
  out.ge_ratio = ratio.ratio;
  out.delta_g_correction = ratio.correction;
  out.branch = branch;
  return out;
}

FlybyCorrection delta_g_flyby(PodolskyScale scale, double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) throw DomainError("delta_g_flyby: epsilon must be >= 0");
  const double A = scale.A();
  return {A * (1.0 - epsilon), A * std::sqrt(1.0 + epsilon * A) * std::exp(-epsilon)};
}

}  // namespace geab::magnetic
