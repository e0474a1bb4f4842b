#pragma once

#include <string>
#include <vector>

#include "geab/radial.hpp"
#include "geab/scaled_value.hpp"

// Radial field and potential of an infinitely long charged cylindrical shell
// (surface charge sigma, radius R) in Podolsky electrodynamics, and the
// electric Aharonov-Bohm phase between two beams held at fixed radii.
//
// Units: e_r in sigma/eps0, potential in sigma R/eps0, radii as S = r/R.
namespace geab::electric {

/// Physical tube, SI units.
struct TubeConfig {
  double radius_m = 0.0;
  double surface_charge_C_per_m2 = 0.0;
  double podolsky_length_m = 0.0;

  std::vector<std::string> validate() const;
  PodolskyScale scale() const;
};

/// Two beams inside the tube at radii S1, S2 (< 1), exposed for transit_time_s.
struct BeamPairGeometry {
  double S1 = 0.0;
  double S2 = 0.0;
  double transit_time_s = 0.0;
  double charge_C = 0.0;

  /// Throws DomainError unless 0 <= S1, S2 < 1, transit time > 0 and the
  /// charge is finite.
  void validate() const;
};

/// Integration constants of the field. b1 scales I_0 inside, b4 scales K_0
/// outside. b1 ~ e^{-1/A} and b4 ~ e^{1/A}, hence ScaledValue.
struct BoundaryCoefficients {
  ScaledValue b1;
  ScaledValue b4;
};

enum class FieldMethod { exact, large_ratio, asymptotic };
enum class PotentialMethod { exact, expansion, asymptotic };

/// Additive constants of the potential on each side of the wall.
struct Gauge {
  double phi0_inside = 0.0;
  double phi0_outside = 0.0;
};

/// Effective source: 0 inside, 1/S from the wall outwards.
double e_eff(RadialPoint p);

BoundaryCoefficients boundary_coeffs(PodolskyScale scale);

/// Radial field. large_ratio requires A <= 0.25 and throws InvalidMethod otherwise.
double e_r(RadialPoint p, PodolskyScale scale, FieldMethod method = FieldMethod::exact);
double e_r_inside(double S, PodolskyScale scale, FieldMethod method = FieldMethod::exact);
double e_r_outside(double S, PodolskyScale scale, FieldMethod method = FieldMethod::exact);
/// d e_r / dS from the exact closed form on either side of the wall.
double e_r_slope_inside(double S, PodolskyScale scale);
double e_r_slope_outside(double S, PodolskyScale scale);

/// Potential with e_r = -d phi / dS, exact closed form, each side up to its
/// gauge constant. Inside, phi(0) = phi0_inside. Outside, phi0_outside is
/// added to A b4 int_zeta^inf K_0 + (pi/2) int_0^zeta (L_0 - I_0).
/// The interior form needs zeta = S/A <= 700 and throws DomainError beyond
/// (use phi_interior_expansion or phi_asymptotic there).
/// S = 1 belongs to the exterior branch, as for e_r.
double phi(RadialPoint p, PodolskyScale scale, Gauge gauge = {});
double phi_inside(double S, PodolskyScale scale);
double phi_outside(double S, PodolskyScale scale);

/// Gauge with the given interior constant and the exterior constant chosen
/// so phi is continuous at the wall.
Gauge continuous_exterior_gauge(PodolskyScale scale, double phi0_inside = 0.0);

/// Potential of the asymptotic field: linear in S inside, -ln S plus an
/// exponentially small K_0 tail outside. Zero on the axis and continuous
/// at the wall. Usable for any A.
double phi_asymptotic(RadialPoint p, PodolskyScale scale);

/// Interior potential from the cubic Taylor form of int I_0 about zeta = 1,
/// without gauge constant. within_validity is false when |zeta - 1| > 1.
Approximation phi_interior_expansion(RadialPoint p, PodolskyScale scale);

/// Podolsky potential difference phi(S2) - phi(S1) between the beams, in
/// sigma R / eps0.
double delta_phi_podolsky(const BeamPairGeometry& geometry, PodolskyScale scale,
                          PotentialMethod method = PotentialMethod::exact);

/// Leading near-axis form: the interior field is the constant
/// sqrt(pi/(2A)) e^{-1/A} for zeta << 1, so the difference is linear.
double delta_phi_near_axis(const BeamPairGeometry& geometry, PodolskyScale scale);

/// Phase -q t (delta phi) / hbar for a potential difference in volts.
double delta_g_electric(const BeamPairGeometry& geometry, double delta_phi_volts);

struct ElectricPhaseResult {
  /// Externally applied Maxwell potential difference, volts.
  double maxwell_delta_phi_V = 0.0;
  /// Podolsky contribution from the charged tube, volts.
  double podolsky_delta_phi_V = 0.0;
  double maxwell_phase = 0.0;
  double podolsky_phase = 0.0;

  double total_phase() const { return maxwell_phase + podolsky_phase; }
};

/// SI phase for the beam pair inside a charged tube. The Maxwell difference
/// (from whatever external arrangement holds the beams at different
/// potentials) is passed in; inside an ideal tube the Maxwell field is zero.
ElectricPhaseResult delta_g_electric_si(const TubeConfig& tube, const BeamPairGeometry& geometry,
                                        double maxwell_delta_phi_V,
                                        PotentialMethod method = PotentialMethod::exact);

}  // namespace geab::electric
