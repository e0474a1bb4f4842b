#include "geab/oracle/potential.hpp"

#include <cmath>
#include <numbers>

#include "geab/errors.hpp"

namespace geab::oracle {

namespace {

// Integral over [x[i], x[i+1]] of the quadratic through nodes j, j+1, j+2,
// by two-point Gauss-Legendre (exact for quadratics).
double interval_integral(const std::vector<double>& x, const std::vector<double>& y, std::size_t i, std::size_t j) {
  const double a = x[i];
  const double b = x[i + 1];
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double g = half / std::numbers::sqrt3;
  auto quad = [&](double t) {
    const double x0 = x[j], x1 = x[j + 1], x2 = x[j + 2];
    return y[j] * (t - x1) * (t - x2) / ((x0 - x1) * (x0 - x2)) +
           y[j + 1] * (t - x0) * (t - x2) / ((x1 - x0) * (x1 - x2)) +
           y[j + 2] * (t - x0) * (t - x1) / ((x2 - x0) * (x2 - x1));
  };
  return half * (quad(mid - g) + quad(mid + g));
}

}  // namespace

SampledPotential integrate_field_to_potential(const BvpSolution& e_samples, double reference_zeta,
                                              double reference_value, double length_scale) {
  const RadialGrid& grid = e_samples.grid;
  const auto& x = grid.nodes();
  const auto& y = e_samples.values;
  if (y.size() != x.size()) throw InvalidArgument("integrate_field_to_potential: size mismatch");
  const std::size_t n = x.size();
  const std::size_t iface = grid.interface_index();
  const std::size_t ref = grid.index_of(reference_zeta);

  std::vector<double> cumulative(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Stencil start j: nodes j..j+2 cover the interval and keep the
    // interface off the middle node so no quadratic spans the kink.
    std::size_t j = i;
    if ((i + 2 >= n || i + 1 == iface) && i > 0) j = i - 1;
    cumulative[i + 1] = cumulative[i] + interval_integral(x, y, i, j);
  }
  SampledPotential out{grid, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i)
    out.values[i] = reference_value - length_scale * (cumulative[i] - cumulative[ref]);
  return out;
}

LoopPhase loop_phase_numeric(const std::function<double(double)>& a_phi_fn, double S, int azimuthal_points) {
  if (!std::isfinite(S) || S < 1.0) throw DomainError("loop_phase_numeric: requires S >= 1");
  if (azimuthal_points < 1) throw InvalidArgument("loop_phase_numeric: need at least one azimuthal point");
  const double dtheta = 2.0 * std::numbers::pi / azimuthal_points;
  double sum = 0.0;
  for (int k = 0; k < azimuthal_points; ++k) {
    const double theta = k * dtheta;
    const double px = S * std::cos(theta);
    const double py = S * std::sin(theta);
    const double r = std::hypot(px, py);
    const double a = a_phi_fn(r);
    // A = a (-y, x)/r, dl = (-S sin, S cos) dtheta.
    const double ax = -a * py / r;
    const double ay = a * px / r;
    sum += (ax * (-S * std::sin(theta)) + ay * (S * std::cos(theta))) * dtheta;
  }
  return {sum, 2.0 * std::numbers::pi * S * a_phi_fn(S)};
}

}  // namespace geab::oracle
