#pragma once

#include <functional>
#include <vector>

#include "geab/oracle/bvp.hpp"

namespace geab::oracle {

struct SampledPotential {
  RadialGrid grid;
  std::vector<double> values;
};

/// phi(zeta) = reference_value - length_scale * int_{reference_zeta}^{zeta} E.
/// Piecewise-quadratic cumulative rule whose stencils never straddle the
/// interface node. reference_zeta must be a grid node. length_scale = A
/// converts a field in sigma/eps0 to a potential in sigma R/eps0.
SampledPotential integrate_field_to_potential(const BvpSolution& e_samples, double reference_zeta,
                                              double reference_value, double length_scale = 1.0);

struct LoopPhase {
  /// Cartesian line integral of A . dl with the given number of azimuthal nodes.
  double azimuthal_sum = 0.0;
  /// 2 pi S a_phi(S).
  double symmetric = 0.0;
};

/// Circulation of an azimuthal vector potential around the circle of radius
/// S, in units of mu0 n I R^2 (multiply by q/hbar for the phase). Throws
/// DomainError for S < 1.
LoopPhase loop_phase_numeric(const std::function<double(double)>& a_phi_fn, double S,
                             int azimuthal_points = 64);

}  // namespace geab::oracle
