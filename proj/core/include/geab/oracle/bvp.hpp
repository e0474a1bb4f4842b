#pragma once

#include <functional>
#include <vector>

#include "geab/oracle/grid.hpp"
#include "geab/radial.hpp"

// Finite-difference solver for u'' + u'/zeta - u = -f(zeta) on a radial grid,
// with f allowed to jump at the interface node.
namespace geab::oracle {

using RealFunction = std::function<double(double)>;

/// Piecewise source. inside applies for zeta < interface, outside for
/// zeta > interface. Slopes are optional; when empty they are taken by
/// one-sided finite differences.
struct RadialSource {
  RealFunction inside;
  RealFunction outside;
  RealFunction inside_slope;
  RealFunction outside_slope;
  /// Large-zeta particular solution approached by u; used by robin_decay.
  /// Empty means u decays to zero.
  RealFunction far_asymptote;
};

/// Source for the axial magnetic field: 1 inside, 0 outside.
RadialSource magnetic_source(PodolskyScale scale);
/// Source for the radial electric field: 0 inside, (1/A)/zeta outside.
RadialSource electric_source(PodolskyScale scale);
/// (1/A) sum_k c_k / zeta^{2k+1}, the algebraic tail of the exterior
/// electric field, optimally truncated.
double electric_far_asymptote(double zeta, PodolskyScale scale);

enum class FarBoundary {
  dirichlet_zero,
  /// (u - p)' + kappa (u - p) = 0 with p the far asymptote and kappa the
  /// logarithmic decay rate of K_0.
  robin_decay,
};

struct BvpSolution {
  RadialGrid grid;
  std::vector<double> values;
  /// max |L_h u - rhs| of the discrete system after the solve.
  double residual_norm = 0.0;
  FarBoundary far_boundary = FarBoundary::dirichlet_zero;
};

/// Regular solution on a grid starting at zeta = 0 (u'(0) = 0 via ghost
/// reflection). Throws InvalidArgument if the grid does not start at 0 and
/// SingularMatrixError if elimination breaks down.
BvpSolution solve_radial_bvp(const RadialSource& source, const RadialGrid& grid,
                             FarBoundary far_boundary = FarBoundary::dirichlet_zero);

/// Same operator with Dirichlet values at both grid ends; the grid may
/// start at zeta_min > 0.
BvpSolution solve_radial_bvp_dirichlet(const RadialSource& source, const RadialGrid& grid,
                                       double u_first, double u_last);

/// (4 u_fine - u_coarse)/3 on the coarse nodes. fine.grid must equal
/// coarse.grid.refined().
std::vector<double> richardson(const BvpSolution& coarse, const BvpSolution& fine);

/// Observed order from a dyadic sequence of solutions: entry k is
/// log2(d_k / d_{k+1}) where d_k = max |u_{k+1} - u_k| over nodes of grid k.
std::vector<double> convergence_order(const std::vector<BvpSolution>& sequence);

/// max |u - exact| / max |exact| over grid nodes with zeta in [lo, hi].
double relative_sup_error(const RadialGrid& grid, const std::vector<double>& values,
                          const RealFunction& exact, double lo, double hi);

}  // namespace geab::oracle
