#pragma once

#include <string>
#include <vector>

#include "geab/radial.hpp"

// Magnetic field and vector potential of an ideal long solenoid of radius R
// in Podolsky electrodynamics, and the resulting Aharonov-Bohm phase.
//
// Units: b_z in mu0 n I, a_phi in mu0 n I R, radii as S = r/R.
namespace geab::magnetic {

/// Physical solenoid, SI units.
struct SolenoidConfig {
  double radius_m = 0.0;
  double turns_per_m = 0.0;
  double current_A = 0.0;
  double podolsky_length_m = 0.0;

  /// Throws DomainError for non-positive radius or Podolsky length or
  /// non-finite fields. Returns warnings (for example A >= 0.5).
  std::vector<std::string> validate() const;
  PodolskyScale scale() const;
};

/// Effective source of the field equation: 1 inside (surface included), 0 outside.
double b_eff(RadialPoint p);

/// Axial field, exact closed form.
double b_z(RadialPoint p, PodolskyScale scale);
double b_z_inside(double S, PodolskyScale scale);
double b_z_outside(double S, PodolskyScale scale);
/// d b_z / dS on either side of the wall.
double b_z_slope_inside(double S, PodolskyScale scale);
double b_z_slope_outside(double S, PodolskyScale scale);

/// Leading large-argument form of b_z. within_validity is false when
/// S <= 2A, where the interior form is not meaningful.
Approximation b_z_approx(RadialPoint p, PodolskyScale scale);

/// Azimuthal vector potential, exact closed form.
double a_phi(RadialPoint p, PodolskyScale scale);
double a_phi_inside(double S, PodolskyScale scale);
double a_phi_outside(double S, PodolskyScale scale);
double a_phi_slope_inside(double S, PodolskyScale scale);
double a_phi_slope_outside(double S, PodolskyScale scale);

/// Large-argument form of a_phi, same validity flag as b_z_approx.
Approximation a_phi_approx(RadialPoint p, PodolskyScale scale);

/// Circulation of A around the circle of radius S, in q mu0 n I R^2 / hbar
/// units once multiplied by q/hbar. Equals pi for Maxwell.
double loop_phase(RadialPoint p, PodolskyScale scale);

struct PhaseRatio {
  /// Podolsky phase / Maxwell phase.
  double ratio = 1.0;
  /// 1 - ratio.
  double correction = 0.0;
};

/// Leading asymptotic ratio 1 - A sqrt(S) e^{-(S-1)/A}. Requires S >= 1.
PhaseRatio delta_g_ratio(RadialPoint p, PodolskyScale scale);
/// Ratio from the exact vector potential, 2 S a_phi(S). Requires S >= 1.
PhaseRatio delta_g_ratio_exact(RadialPoint p, PodolskyScale scale);

enum class PhaseBranch { exact, asymptotic };

struct PhaseShiftResult {
  /// q mu0 n I pi R^2 / hbar, in radians.
  double maxwell_phase = 0.0;
  double ge_ratio = 1.0;
  double delta_g_correction = 0.0;
  PhaseBranch branch = PhaseBranch::exact;

  double total_phase() const { return maxwell_phase * ge_ratio; }
};

/// Aharonov-Bohm phase in SI for a charge q encircling the solenoid at
/// radius r_m (must be >= R). The asymptotic branch is the default; the
/// exact branch uses the Bessel form of the vector potential.
PhaseShiftResult delta_g_magnetic_si(const SolenoidConfig& config, double charge_C, double r_m,
                                     PhaseBranch branch = PhaseBranch::asymptotic);

struct FlybyCorrection {
  /// A (1 - epsilon).
  double first_order = 0.0;
  /// A sqrt(1 + epsilon A) e^{-epsilon}, the same quantity before expansion.
  double unexpanded = 0.0;
};

/// Correction for a beam passing at S = 1 + epsilon A just outside the wall.
/// Requires epsilon >= 0.
FlybyCorrection delta_g_flyby(PodolskyScale scale, double epsilon);

}  // namespace geab::magnetic
