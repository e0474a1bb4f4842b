#include "geab/electric.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "geab/errors.hpp"
#include "geab/specfun.hpp"
#include "geab/units.hpp"

namespace geab::electric {

using specfun::bessel_i;
using specfun::bessel_k;
using specfun::struve_minus_bessel;
using specfun::struve_minus_bessel_shifted;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLargeRatioMaxA = 0.25;
constexpr double kHypergeometricMaxZeta = 700.0;

const std::vector<specfun::Rational> kI0Numerators{specfun::Rational{1, 2}};
const std::vector<specfun::Rational> kI0Denominators{specfun::Rational{1, 1}, specfun::Rational{3, 2}};

// The exterior branch is closed at the wall.
bool outside_branch(RadialPoint p) {
  if (!std::isfinite(p.S) || p.S < 0.0) throw DomainError("RadialPoint: S must be finite and >= 0");
  if ((p.region == Region::inside && p.S > 1.0) || (p.region == Region::outside && p.S < 1.0) ||
      (p.region == Region::surface && p.S != 1.0))
    throw DomainError("RadialPoint: region tag inconsistent with S");
  return p.region != Region::inside;
}

void check_S(double S, const char* who) {
  if (!std::isfinite(S) || S < 0.0) throw DomainError(std::string(who) + ": S must be finite and >= 0");
}

void check_exterior_S(double S, const char* who) {
  if (!std::isfinite(S) || S <= 0.0) throw DomainError(std::string(who) + ": S must be finite and > 0");
}

ScaledValue asymptotic_b1(PodolskyScale scale) {
  return ScaledValue{std::sqrt(kPi / (2.0 * scale.A())), -scale.surface_zeta()}.normalized();
}

ScaledValue asymptotic_b4(PodolskyScale scale) {
  return ScaledValue{-std::sqrt(1.0 / (2.0 * kPi * scale.A())), scale.surface_zeta()}.normalized();
}

void check_large_ratio(PodolskyScale scale) {
  if (scale.A() > kLargeRatioMaxA)
    throw InvalidMethod("e_r: large_ratio method requires A <= 0.25, got A = " + std::to_string(scale.A()));
}

// Integral of the quadratic Taylor form of I_0 about zeta = 1, without
// its constant of integration.
double cubic_i0_antiderivative(double zeta) {
  const double i0 = bessel_i(0, 1.0).value();
  const double i1 = bessel_i(1, 1.0).value();
  const double d = zeta - 1.0;
  return i0 * zeta + i1 * d * d / 2.0 + 0.5 * (i0 - i1) * d * d * d / 3.0;
}

// Interior potential without gauge constant: -b1 S 1F2(1/2; 1, 3/2; zeta^2/4).
double interior_potential(double S, PodolskyScale scale, const ScaledValue& b1) {
  const double zeta = scale.zeta(S);
  if (zeta > kHypergeometricMaxZeta)
    throw DomainError("phi: zeta = S/A exceeds 700 for the hypergeometric form; use phi_interior_expansion or "
                      "phi_asymptotic");
  if (S == 0.0) return 0.0;
  return -(b1 * specfun::hyp_pfq(kI0Numerators, kI0Denominators, zeta * zeta / 4.0, {}) * S).value();
}

}  // namespace

std::vector<std::string> TubeConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(radius_m)) throw DomainError("TubeConfig: R must be positive");
  if (!positive(podolsky_length_m)) throw DomainError("TubeConfig: a must be positive");
  if (!std::isfinite(surface_charge_C_per_m2)) throw DomainError("TubeConfig: sigma must be finite");
  const double A = podolsky_length_m / radius_m;
  if (A >= 1.0) throw DomainError("TubeConfig: A = a/R must be < 1");
  std::vector<std::string> warnings;
  if (A >= 0.5) warnings.emplace_back("A = a/R >= 0.5: large-R/a approximations are not meaningful");
  return warnings;
}

PodolskyScale TubeConfig::scale() const { return PodolskyScale::from_lengths(podolsky_length_m, radius_m); }

void BeamPairGeometry::validate() const {
  auto in_tube = [](double S) { return std::isfinite(S) && S >= 0.0 && S < 1.0; };
  if (!in_tube(S1) || !in_tube(S2)) throw DomainError("BeamPairGeometry: S1 and S2 must lie in [0, 1)");
  if (!std::isfinite(transit_time_s) || transit_time_s <= 0.0)
    throw DomainError("BeamPairGeometry: transit time must be positive");
  if (!std::isfinite(charge_C)) throw DomainError("BeamPairGeometry: charge must be finite");
}

double e_eff(RadialPoint p) { return outside_branch(p) ? 1.0 / p.S : 0.0; }

BoundaryCoefficients boundary_coeffs(PodolskyScale scale) {
  const double z0 = scale.surface_zeta();
  const double m0 = struve_minus_bessel(0, z0);
  const double m1s = struve_minus_bessel_shifted(z0);
  const double pre = -kPi / 2.0 * z0 * z0;
  BoundaryCoefficients c;
  c.b1 = (bessel_k(1, z0) * m0 + bessel_k(0, z0) * m1s) * pre;
  c.b4 = (bessel_i(0, z0) * m1s - bessel_i(1, z0) * m0) * pre;
  return c;
}

double e_r_inside(double S, PodolskyScale scale, FieldMethod method) {
  check_S(S, "e_r_inside");
  const double zeta = scale.zeta(S);
  switch (method) {
    case FieldMethod::exact:
      return (boundary_coeffs(scale).b1 * bessel_i(0, zeta)).value();
    case FieldMethod::large_ratio: {
      check_large_ratio(scale);
      const double z0 = scale.surface_zeta();
      const double s0 = struve_minus_bessel(0, z0);
      const double s1 = struve_minus_bessel(1, z0);
      const ScaledValue k0 = bessel_k(0, z0);
      const ScaledValue coeff = (bessel_k(1, z0) * s0 + k0 * s1 + k0 * (2.0 / kPi)) * (-kPi / 2.0 * z0 * z0);
      return (coeff * bessel_i(0, zeta)).value();
    }
    case FieldMethod::asymptotic:
      return (asymptotic_b1(scale) * bessel_i(0, zeta)).value();
  }
  throw InvalidMethod("e_r_inside: unknown method");
}

double e_r_outside(double S, PodolskyScale scale, FieldMethod method) {
  check_exterior_S(S, "e_r_outside");
  const double zeta = scale.zeta(S);
  const double z0 = scale.surface_zeta();
  switch (method) {
    case FieldMethod::exact:
      return (boundary_coeffs(scale).b4 * bessel_k(0, zeta)).value() - kPi / 2.0 * z0 * struve_minus_bessel(0, zeta);
    case FieldMethod::large_ratio: {
      check_large_ratio(scale);
      const double s0 = struve_minus_bessel(0, z0);
      const double s1 = struve_minus_bessel(1, z0);
      const ScaledValue i0 = bessel_i(0, z0);
      const ScaledValue coeff = (i0 * s1 - bessel_i(1, z0) * s0 + i0 * (2.0 / kPi)) * (-kPi / 2.0 * z0 * z0);
      return (coeff * bessel_k(0, zeta)).value() - kPi / 2.0 * z0 * struve_minus_bessel(0, zeta);
    }
    case FieldMethod::asymptotic:
      return (asymptotic_b4(scale) * bessel_k(0, zeta)).value() + 1.0 / S;
  }
  throw InvalidMethod("e_r_outside: unknown method");
}

double e_r(RadialPoint p, PodolskyScale scale, FieldMethod method) {
  return outside_branch(p) ? e_r_outside(p.S, scale, method) : e_r_inside(p.S, scale, method);
}

double e_r_slope_inside(double S, PodolskyScale scale) {
  check_S(S, "e_r_slope_inside");
  const double z0 = scale.surface_zeta();
  return (boundary_coeffs(scale).b1 * bessel_i(1, scale.zeta(S)) * z0).value();
}

double e_r_slope_outside(double S, PodolskyScale scale) {
  check_exterior_S(S, "e_r_slope_outside");
  const double z0 = scale.surface_zeta();
  const double zeta = scale.zeta(S);
  // d/dzeta (L_0 - I_0) = L_1 - I_1 + 2/pi.
  const double dzeta = -(boundary_coeffs(scale).b4 * bessel_k(1, zeta)).value() -
                       kPi / 2.0 * z0 * struve_minus_bessel_shifted(zeta);
  return dzeta * z0;
}

double phi_inside(double S, PodolskyScale scale) {
  check_S(S, "phi_inside");
  return interior_potential(S, scale, boundary_coeffs(scale).b1);
}

double phi_outside(double S, PodolskyScale scale) {
  check_exterior_S(S, "phi_outside");
  const double zeta = scale.zeta(S);
  const ScaledValue k_part = boundary_coeffs(scale).b4 * specfun::bessel_k0_tail_integral(zeta) * scale.A();
  return k_part.value() + kPi / 2.0 * specfun::struve_minus_bessel_integral(zeta);
}

double phi(RadialPoint p, PodolskyScale scale, Gauge gauge) {
  return outside_branch(p) ? phi_outside(p.S, scale) + gauge.phi0_outside
                           : phi_inside(p.S, scale) + gauge.phi0_inside;
}

Gauge continuous_exterior_gauge(PodolskyScale scale, double phi0_inside) {
  return {phi0_inside, phi0_inside + phi_inside(1.0, scale) - phi_outside(1.0, scale)};
}

double phi_asymptotic(RadialPoint p, PodolskyScale scale) {
  const ScaledValue b1 = asymptotic_b1(scale);
  // Inside, the asymptotic field is taken at its near-axis value b1 I_0(0) = b1.
  auto inside = [&](double S) { return -(b1 * S).value(); };
  if (!outside_branch(p)) return inside(p.S);
  auto outside = [&](double S) {
    return (asymptotic_b4(scale) * specfun::bessel_k0_tail_integral(scale.zeta(S)) * scale.A()).value() -
           std::log(S);
  };
  return outside(p.S) + inside(1.0) - outside(1.0);
}

Approximation phi_interior_expansion(RadialPoint p, PodolskyScale scale) {
  if (outside_branch(p) && p.S > 1.0) throw DomainError("phi_interior_expansion: requires S <= 1");
  const double zeta = scale.zeta(p.S);
  const ScaledValue b1 = boundary_coeffs(scale).b1;
  return {-(b1 * (scale.A() * cubic_i0_antiderivative(zeta))).value(), std::abs(zeta - 1.0) <= 1.0};
}

double delta_phi_podolsky(const BeamPairGeometry& geometry, PodolskyScale scale, PotentialMethod method) {
  geometry.validate();
  const double A = scale.A();
  auto difference = [&](auto&& potential) { return potential(geometry.S2) - potential(geometry.S1); };
  switch (method) {
    case PotentialMethod::exact: {
      const ScaledValue b1 = boundary_coeffs(scale).b1;
      return difference([&](double S) { return interior_potential(S, scale, b1); });
    }
    case PotentialMethod::expansion: {
      const ScaledValue b1 = boundary_coeffs(scale).b1;
      return difference([&](double S) { return -(b1 * (A * cubic_i0_antiderivative(scale.zeta(S)))).value(); });
    }
    case PotentialMethod::asymptotic: {
      const ScaledValue b1 = asymptotic_b1(scale);
      return difference([&](double S) { return -(b1 * (A * cubic_i0_antiderivative(scale.zeta(S)))).value(); });
    }
  }
  throw InvalidMethod("delta_phi_podolsky: unknown method");
}

double delta_phi_near_axis(const BeamPairGeometry& geometry, PodolskyScale scale) {
  geometry.validate();
  return (asymptotic_b1(scale) * (geometry.S1 - geometry.S2)).value();
}

double delta_g_electric(const BeamPairGeometry& geometry, double delta_phi_volts) {
  geometry.validate();
  if (!std::isfinite(delta_phi_volts)) throw DomainError("delta_g_electric: potential difference must be finite");
  return -geometry.charge_C * geometry.transit_time_s * delta_phi_volts / si::hbar;
}

ElectricPhaseResult delta_g_electric_si(const TubeConfig& tube, const BeamPairGeometry& geometry,
                                        double maxwell_delta_phi_V, PotentialMethod method) {
  tube.validate();
  const double volts_per_unit = tube.surface_charge_C_per_m2 * tube.radius_m / si::eps0;
  ElectricPhaseResult out;
  out.maxwell_delta_phi_V = maxwell_delta_phi_V;
  out.podolsky_delta_phi_V = delta_phi_podolsky(geometry, tube.scale(), method) * volts_per_unit;
  out.maxwell_phase = delta_g_electric(geometry, maxwell_delta_phi_V);
  out.podolsky_phase = delta_g_electric(geometry, out.podolsky_delta_phi_V);
  return out;
}

}  // namespace geab::electric
