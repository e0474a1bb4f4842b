#include "geab/oracle/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geab/errors.hpp"

namespace geab::oracle {

namespace {

struct Tridiagonal {
  std::vector<double> lower, diag, upper, rhs;

  explicit Tridiagonal(std::size_t n) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0) {}
};

std::vector<double> thomas(const Tridiagonal& m) {
  const std::size_t n = m.diag.size();
  std::vector<double> c(n), d(n), x(n);
  double scale = 0.0;
  for (double v : m.diag) scale = std::max(scale, std::abs(v));
  auto pivot_ok = [&](double p) { return std::abs(p) > 1e-14 * scale; };
  if (!pivot_ok(m.diag[0])) throw SingularMatrixError("solve_radial_bvp: singular pivot at row 0");
  c[0] = m.upper[0] / m.diag[0];
  d[0] = m.rhs[0] / m.diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double p = m.diag[i] - m.lower[i] * c[i - 1];
    if (!pivot_ok(p)) throw SingularMatrixError("solve_radial_bvp: singular pivot at row " + std::to_string(i));
    c[i] = m.upper[i] / p;
    d[i] = (m.rhs[i] - m.lower[i] * d[i - 1]) / p;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

double residual(const Tridiagonal& m, const std::vector<double>& u) {
  double r = 0.0;
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    double v = m.diag[i] * u[i] - m.rhs[i];
    if (i > 0) v += m.lower[i] * u[i - 1];
    if (i + 1 < n) v += m.upper[i] * u[i + 1];
    r = std::max(r, std::abs(v));
  }
  return r;
}

double slope(const RealFunction& explicit_slope, const RealFunction& f, double x) {
  if (explicit_slope) return explicit_slope(x);
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

void check_source(const RadialSource& s) {
  if (!s.inside || !s.outside) throw InvalidArgument("solve_radial_bvp: source needs inside and outside parts");
}

// Rows 1 .. n-2 of u'' + u'/zeta - u = -f. At the interface node the left
// limit of the equation is imposed and the O(h) terms produced by the known
// jumps [u''] = -[f], [u'''] = -[f'] + [f]/zeta move to the right-hand side.
Tridiagonal assemble_interior(const RadialSource& source, const RadialGrid& grid) {
  const auto& x = grid.nodes();
  const std::size_t n = x.size();
  const std::size_t iface = grid.interface_index();
  Tridiagonal m(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = x[i] - x[i - 1];
    const double hp = x[i + 1] - x[i];
    const double H = hm + hp;
    const double z = x[i];
    m.lower[i] = 2.0 / (hm * H) - hp / (hm * H) / z;
    m.diag[i] = -2.0 / (hm * hp) + (hp - hm) / (hm * hp) / z - 1.0;
    m.upper[i] = 2.0 / (hp * H) + hm / (hp * H) / z;
    if (i < iface) {
      m.rhs[i] = -source.inside(z);
    } else if (i > iface) {
      m.rhs[i] = -source.outside(z);
    } else {
      const double f_in = source.inside(z);
      const double jump = source.outside(z) - f_in;
      const double jump_slope = slope(source.outside_slope, source.outside, z) -
                                slope(source.inside_slope, source.inside, z);
      const double jump3 = -jump_slope + jump / z;
      m.rhs[i] = -f_in - hp / H * jump + hp * hp / (3.0 * H) * jump3 - hm * hp / (2.0 * H * z) * jump;
    }
  }
  return m;
}

BvpSolution finish(const Tridiagonal& m, const RadialGrid& grid, FarBoundary far) {
  BvpSolution sol{grid, thomas(m), 0.0, far};
  sol.residual_norm = residual(m, sol.values);
  for (double v : sol.values)
    if (!std::isfinite(v)) throw SingularMatrixError("solve_radial_bvp: non-finite solution");
  return sol;
}

}  // namespace

RadialSource magnetic_source(PodolskyScale) {
  RadialSource s;
  s.inside = [](double) { return 1.0; };
  s.outside = [](double) { return 0.0; };
  s.inside_slope = [](double) { return 0.0; };
  s.outside_slope = [](double) { return 0.0; };
  return s;
}

RadialSource electric_source(PodolskyScale scale) {
  const double inv_a = 1.0 / scale.A();
  RadialSource s;
  s.inside = [](double) { return 0.0; };
  s.outside = [inv_a](double z) { return inv_a / z; };
  s.inside_slope = [](double) { return 0.0; };
  s.outside_slope = [inv_a](double z) { return -inv_a / (z * z); };
  s.far_asymptote = [scale](double z) { return electric_far_asymptote(z, scale); };
  return s;
}

double electric_far_asymptote(double zeta, PodolskyScale scale) {
  if (!(zeta > 0.0)) throw DomainError("electric_far_asymptote: zeta must be positive");
  const double inv2 = 1.0 / (zeta * zeta);
  double term = 1.0 / zeta;
  double sum = term;
  for (int k = 0; k < 200; ++k) {
    const double next = term * (2.0 * k + 1.0) * (2.0 * k + 1.0) * inv2;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum / scale.A();
}

BvpSolution solve_radial_bvp(const RadialSource& source, const RadialGrid& grid, FarBoundary far_boundary) {
  check_source(source);
  if (grid.zeta_min() != 0.0) throw InvalidArgument("solve_radial_bvp: grid must start on the axis");
  Tridiagonal m = assemble_interior(source, grid);
  const auto& x = grid.nodes();
  const std::size_t n = x.size();

  // Axis: the ghost node u(-h) = u(h) turns u'' + u'/zeta into 4 (u1 - u0)/h^2.
  const double h0 = x[1] - x[0];
  m.diag[0] = -4.0 / (h0 * h0) - 1.0;
  m.upper[0] = 4.0 / (h0 * h0);
  m.rhs[0] = -(grid.interface_index() == 0 ? source.outside(0.0) : source.inside(0.0));

  const std::size_t last = n - 1;
  const double Z = x[last];
  if (far_boundary == FarBoundary::dirichlet_zero) {
    m.lower[last] = 0.0;
    m.diag[last] = 1.0;
    m.rhs[last] = 0.0;
  } else {
    // Ghost node from (u - p)' + kappa (u - p) = 0, kappa ~ K_1(Z)/K_0(Z).
    const double kappa = 1.0 + 1.0 / (2.0 * Z) - 1.0 / (8.0 * Z * Z);
    const double p = source.far_asymptote ? source.far_asymptote(Z) : 0.0;
    const double dp = source.far_asymptote ? slope({}, source.far_asymptote, Z) : 0.0;
    const double h = Z - x[last - 1];
    // u_ghost = u_{N-1} + 2h (dp - kappa (u_N - p))
    const double g_const = 2.0 * h * (dp + kappa * p);
    const double g_diag = -2.0 * h * kappa;
    const double c2 = 1.0 / (h * h);
    const double c1 = 1.0 / (2.0 * h * Z);
    // (u_{N-1} - 2u_N + g)/h^2 + (g - u_{N-1})/(2hZ) - u_N = -f
    m.lower[last] = 2.0 * c2;
    m.diag[last] = -2.0 * c2 + (c2 + c1) * g_diag - 1.0;
    m.rhs[last] = -source.outside(Z) - (c2 + c1) * g_const;
  }
  return finish(m, grid, far_boundary);
}

BvpSolution solve_radial_bvp_dirichlet(const RadialSource& source, const RadialGrid& grid, double u_first,
                                       double u_last) {
  check_source(source);
  Tridiagonal m = assemble_interior(source, grid);
  const std::size_t last = grid.size() - 1;
  m.diag[0] = 1.0;
  m.upper[0] = 0.0;
  m.rhs[0] = u_first;
  m.lower[last] = 0.0;
  m.diag[last] = 1.0;
  m.rhs[last] = u_last;
  return finish(m, grid, FarBoundary::dirichlet_zero);
}

std::vector<double> richardson(const BvpSolution& coarse, const BvpSolution& fine) {
  const std::size_t n = coarse.values.size();
  if (fine.values.size() != 2 * n - 1) throw InvalidArgument("richardson: fine grid is not a refinement of coarse");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (fine.grid[2 * i] != coarse.grid[i]) throw InvalidArgument("richardson: grids are not nested");
    out[i] = (4.0 * fine.values[2 * i] - coarse.values[i]) / 3.0;
  }
  return out;
}

std::vector<double> convergence_order(const std::vector<BvpSolution>& sequence) {
  if (sequence.size() < 3) throw InvalidArgument("convergence_order: need at least three nested solutions");
  std::vector<double> diffs;
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
    const auto& c = sequence[k];
    const auto& f = sequence[k + 1];
    if (f.values.size() != 2 * c.values.size() - 1)
      throw InvalidArgument("convergence_order: solutions are not a dyadic sequence");
    double d = 0.0;
    for (std::size_t i = 0; i < c.values.size(); ++i) d = std::max(d, std::abs(f.values[2 * i] - c.values[i]));
    diffs.push_back(d);
  }
  std::vector<double> orders;
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k) orders.push_back(std::log2(diffs[k] / diffs[k + 1]));
  return orders;
}

double relative_sup_error(const RadialGrid& grid, const std::vector<double>& values, const RealFunction& exact,
                          double lo, double hi) {
  if (values.size() != grid.size()) throw InvalidArgument("relative_sup_error: size mismatch");
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < lo || grid[i] > hi) continue;
    const double e = exact(grid[i]);
    err = std::max(err, std::abs(values[i] - e));
    scale = std::max(scale, std::abs(e));
  }
  if (scale == 0.0) throw InvalidArgument("relative_sup_error: exact solution vanishes on the range");
  return err / scale;
}

}  // namespace geab::oracle
