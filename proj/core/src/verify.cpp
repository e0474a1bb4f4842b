#include "geab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "geab/electric.hpp"
#include "geab/magnetic.hpp"
#include "geab/oracle/boundary_system.hpp"
#include "geab/oracle/bvp.hpp"
#include "geab/oracle/potential.hpp"
#include "geab/oracle/quadrature.hpp"
#include "geab/specfun.hpp"

namespace geab::verify {

namespace {

constexpr double kPi = std::numbers::pi;
using Fn = std::function<double(double)>;

double rel(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

RadialPoint at(double S) { return RadialPoint::at(S); }

// |e(h)/e(h/2) - 4| for a quantity whose FD error is second order.
double order_defect(const std::function<double(double)>& error_at) {
  return std::abs(error_at(0.02) / error_at(0.01) - 4.0);
}

class Suite {
 public:
  void add(const char* module, const char* name, double observed, double tolerance) {
    // NaN fails
    const bool ok = observed <= tolerance;
    checks_.push_back({module, name, observed, tolerance, ok});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

void specfun_checks(Suite& s) {
  using specfun::IScaling;
  using specfun::KScaling;
  double w = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double z = 0.05 * std::pow(500.0 / 0.05, i / 199.0);
    const double v = z * (specfun::bessel_i(0, z, IScaling::times_exp_minus_z).value() *
                              specfun::bessel_k(1, z, KScaling::times_exp_plus_z).value() +
                          specfun::bessel_i(1, z, IScaling::times_exp_minus_z).value() *
                              specfun::bessel_k(0, z, KScaling::times_exp_plus_z).value());
    w = std::max(w, std::abs(v - 1.0));
  }
  s.add("specfun", "wronskian_0.05_500", w, 1e-12);

  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 400; ++k) {
    term *= 100.0L / (static_cast<long double>(k) * k);
    sum += term;
  }
  s.add("specfun", "bessel_i0_scaled_z20",
        rel(specfun::bessel_i(0, 20.0, IScaling::times_exp_minus_z).value(),
            static_cast<double>(std::exp(-20.0L) * sum)),
        1e-12);

  const double z = 1e-6;
  s.add("specfun", "bessel_k0_small_z",
        std::abs(specfun::bessel_k(0, z).value() - (-std::log(z / 2) - 0.57721566490153286061)), 1e-10);

  const auto lq = oracle::quadrature([](double t) { return std::sinh(5.0 * std::cos(t)); }, 0.0, kPi / 2, 1e-13);
  s.add("specfun", "struve_l0_z5_vs_quadrature", rel(specfun::struve_l(0, 5.0).value(), 2 / kPi * lq.value), 1e-10);

  double jump = 0.0;
  for (double x = specfun::struve_switch - 1.0; x <= specfun::struve_switch + 1.0; x += 0.125)
    for (int nu : {0, 1})
      jump = std::max(jump, rel(specfun::struve_minus_bessel(nu, x), specfun::struve_tail_asymptotic(nu, x)));
  s.add("specfun", "struve_branch_continuity", jump, 1e-9);

  const auto iq = oracle::quadrature([](double t) { return specfun::bessel_i(0, t).value(); }, 0.0, 4.0, 1e-14);
  s.add("specfun", "int_i0_hypergeometric_z4", rel(specfun::bessel_i0_integral(4.0).value(), iq.value), 1e-10);

  const auto l0q = oracle::quadrature([](double t) { return specfun::struve_l(0, t).value(); }, 0.0, 3.0, 1e-14);
  const double l0_closed = 9.0 / kPi * specfun::hyp_pfq({{1, 1}, {1, 1}}, {{3, 2}, {3, 2}, {2, 1}}, 9.0 / 4).value();
  s.add("specfun", "int_l0_hypergeometric_z3", rel(l0_closed, l0q.value), 1e-10);

  const auto kq = oracle::quadrature([](double t) { return specfun::bessel_k(0, t).value(); }, 1.0, 2.0, 1e-14);
  s.add("specfun", "int_k0_1_2",
        rel(specfun::bessel_k0_integral(2.0) - specfun::bessel_k0_integral(1.0), kq.value), 1e-10);

  const double x = 3.0;
  s.add("specfun", "d_zk1_order2", order_defect([x](double h) {
          auto f = [](double t) { return t * specfun::bessel_k(1, t).value(); };
          return std::abs((f(x + h) - f(x - h)) / (2 * h) + x * specfun::bessel_k(0, x).value());
        }),
        0.4);
  s.add("specfun", "d_l0_order2", order_defect([](double h) {
          auto f = [](double t) { return specfun::struve_l(0, t).value(); };
          return std::abs((f(2.5 + h) - f(2.5 - h)) / (2 * h) - specfun::struve_l(1, 2.5).value() - 2 / kPi);
        }),
        0.4);
}

void magnetic_checks(Suite& s) {
  using namespace magnetic;
  double field = 0.0, slope = 0.0, pot = 0.0;
  for (double A : {0.1, 0.2}) {
    const PodolskyScale sc(A);
    field = std::max(field, std::abs(b_z_inside(1.0, sc) - b_z_outside(1.0, sc)));
    slope = std::max(slope, std::abs(b_z_slope_inside(1.0, sc) - b_z_slope_outside(1.0, sc)));
    pot = std::max(pot, std::abs(a_phi_inside(1.0, sc) - a_phi_outside(1.0, sc)));
  }
  s.add("magnetic", "b_z_continuity", field, 1e-10);
  s.add("magnetic", "b_z_slope_continuity", slope, 1e-8);
  s.add("magnetic", "a_phi_continuity", pot, 1e-10);

  const PodolskyScale small(0.01);
  s.add("magnetic", "maxwell_limit",
        std::max({std::abs(b_z(at(0.5), small) - 1.0), std::abs(b_z(at(2.0), small)),
                  std::abs(a_phi(at(3.0), small) - 1.0 / 6.0)}),
        1e-12);
  s.add("magnetic", "surface_half_value", std::abs(b_z(at(1.0), small) - 0.5), 0.01);

  const PodolskyScale mid(0.05);
  s.add("magnetic", "delta_g_at_wall_equals_A", std::abs(delta_g_ratio(at(1.0), mid).correction - 0.05), 0.0);
  double violations = 0.0;
  double prev = delta_g_ratio(at(1.0), mid).correction;
  for (int i = 1; i <= 300; ++i) {
    const double cur = delta_g_ratio(at(1.0 + 3.0 * i / 300.0), mid).correction;
    if (!(cur < prev)) violations += 1.0;
    prev = cur;
  }
  s.add("magnetic", "delta_g_monotone", violations, 0.0);

  double worst = 0.0;
  for (double S : {1.0, 1.2, 2.0}) {
    const auto loop = oracle::loop_phase_numeric([&](double r) { return a_phi(at(r), mid); }, S);
    const double bound = std::exp(-(S - 1.0) / 0.05) * 10 * 0.05 * 0.05;
    worst = std::max(worst, std::abs(loop.azimuthal_sum / kPi - delta_g_ratio(at(S), mid).ratio) / bound);
  }
  s.add("magnetic", "loop_vs_formula_over_bound", worst, 1.0);

  const PodolskyScale sc(0.1);
  s.add("magnetic", "curl_order2", order_defect([&](double h) {
          const double S = 0.7;
          const double curl = ((S + h) * a_phi(at(S + h), sc) - (S - h) * a_phi(at(S - h), sc)) / (2 * h) / S;
          return std::abs(curl - b_z(at(S), sc));
        }),
        0.4);
  s.add("magnetic", "field_equation_order2", order_defect([&](double hs) {
          const double h = hs * 2.0;
          auto u = [&](double zeta) { return b_z_outside(zeta * 0.1, sc); };
          const double z = 14.0;
          const double d2 = (u(z + h) - 2 * u(z) + u(z - h)) / (h * h);
          const double d1 = (u(z + h) - u(z - h)) / (2 * h);
          return std::abs(d2 + d1 / z - u(z));
        }),
        0.4);
}

void electric_checks(Suite& s) {
  using namespace electric;
  double coeff = 0.0;
  for (double A : {0.05, 0.1, 0.2}) {
    const PodolskyScale sc(A);
    const auto closed = boundary_coeffs(sc);
    const auto solved = oracle::boundary_coeffs_by_linear_solve(sc);
    coeff = std::max({coeff, std::abs((closed.b1 / solved.b1).value() - 1.0),
                      std::abs((closed.b4 / solved.b4).value() - 1.0)});
  }
  s.add("electric", "boundary_coeffs_vs_linear_solve", coeff, 1e-10);

  double field = 0.0, slope = 0.0;
  for (double A : {0.1, 0.2}) {
    const PodolskyScale sc(A);
    field = std::max(field, std::abs(e_r_inside(1.0, sc) - e_r_outside(1.0, sc)));
    slope = std::max(slope, std::abs(e_r_slope_inside(1.0, sc) - e_r_slope_outside(1.0, sc)));
  }
  s.add("electric", "e_r_continuity", field, 1e-8);
  s.add("electric", "e_r_slope_continuity", slope, 1e-8);

  const PodolskyScale sc(0.1);
  double branches = 0.0;
  for (double S : {0.3, 0.7, 1.5, 3.0})
    branches = std::max(branches, rel(e_r(at(S), sc, FieldMethod::large_ratio), e_r(at(S), sc)));
  s.add("electric", "exact_vs_large_ratio", branches, 1e-8);

  double null = 0.0, anti = 0.0;
  for (PotentialMethod m : {PotentialMethod::exact, PotentialMethod::expansion, PotentialMethod::asymptotic}) {
    null = std::max(null, std::abs(delta_phi_podolsky({0.4, 0.4, 1.0, 1.0}, sc, m)));
    const double f = delta_phi_podolsky({0.2, 0.8, 1.0, 1.0}, sc, m);
    const double b = delta_phi_podolsky({0.8, 0.2, 1.0, 1.0}, sc, m);
    anti = std::max(anti, std::abs(f + b) / std::abs(f));
  }
  s.add("electric", "delta_phi_equal_offset_null", null, 0.0);
  s.add("electric", "delta_phi_antisymmetry", anti, 1e-15);

  const auto q = oracle::quadrature([&](double S) { return e_r(at(S), sc); }, 0.0, 0.5, 1e-16);
  s.add("electric", "delta_phi_vs_quadrature",
        rel(delta_phi_podolsky({0.0, 0.5, 1.0, 1.0}, sc, PotentialMethod::exact), -q.value), 1e-6);

  const PodolskyScale g(0.15);
  s.add("electric", "gradient_order2", order_defect([&](double h) {
          const double S = 0.6;
          return std::abs(-(phi(at(S + h), g) - phi(at(S - h), g)) / (2 * h) - e_r(at(S), g));
        }),
        0.4);
  s.add("electric", "struve_particular_order2", order_defect([](double hs) {
          const double h = hs * 2.0;
          auto e = [](double z) { return -kPi / 2 * 10.0 * specfun::struve_l(0, z).value(); };
          const double z = 4.0;
          const double d2 = (e(z + h) - 2 * e(z) + e(z - h)) / (h * h);
          const double d1 = (e(z + h) - e(z - h)) / (2 * h);
          return std::abs(z * z * d2 + z * d1 - z * z * e(z) + 10.0 * z);
        }),
        0.4);
}

void oracle_checks(Suite& s) {
  const PodolskyScale sc(0.05);
  const auto loop = oracle::loop_phase_numeric([&](double r) { return magnetic::a_phi(at(r), sc); }, 1.5);
  s.add("oracle", "azimuthal_sum_vs_symmetric", std::abs(loop.azimuthal_sum - loop.symmetric), 1e-12);

  double optimistic = 0.0;
  for (double tol : {1e-4, 1e-8}) {
    const auto qi = oracle::quadrature([](double t) { return specfun::bessel_i(0, t).value(); }, 0.0, 4.0, tol);
    if (std::abs(qi.value - specfun::bessel_i0_integral(4.0).value()) > std::max(qi.error_estimate, 1e-15))
      optimistic += 1.0;
    const auto qk = oracle::quadrature([](double t) { return specfun::bessel_k(0, t).value(); }, 1.0, 2.0, tol);
    if (std::abs(qk.value - (specfun::bessel_k0_integral(2.0) - specfun::bessel_k0_integral(1.0))) >
        std::max(qk.error_estimate, 1e-15))
      optimistic += 1.0;
  }
  s.add("oracle", "quadrature_estimate_conservative", optimistic, 0.0);

  const auto unit = oracle::quadrature([](double) { return 1.0; }, 0.0, 1.0, 1e-14);
  s.add("oracle", "quadrature_unit_interval", std::abs(unit.value - 1.0), 1e-15);
}

void bvp_checks(Suite& s) {
  for (int which = 0; which < 2; ++which) {
    for (double A : {0.1, 0.2}) {
      const PodolskyScale sc(A);
      const double iface = sc.surface_zeta();
      const auto src = which == 0 ? oracle::magnetic_source(sc) : oracle::electric_source(sc);
      const auto fb = which == 0 ? oracle::FarBoundary::dirichlet_zero : oracle::FarBoundary::robin_decay;
      const Fn exact = which == 0 ? Fn([sc](double z) { return magnetic::b_z(at(z * sc.A()), sc); })
                                  : Fn([sc](double z) { return electric::e_r(at(z * sc.A()), sc); });
      const auto grid = oracle::RadialGrid::uniform(iface + 20.0, iface, 2049);
      const auto coarse = oracle::solve_radial_bvp(src, grid, fb);
      const auto fine = oracle::solve_radial_bvp(src, grid.refined(), fb);
      const double err = oracle::relative_sup_error(grid, oracle::richardson(coarse, fine), exact, 0.0, 5.0 / A);
      std::vector<oracle::BvpSolution> seq{
          oracle::solve_radial_bvp(src, oracle::RadialGrid::uniform(iface + 20.0, iface, 257), fb)};
      for (int k = 0; k < 2; ++k) seq.push_back(oracle::solve_radial_bvp(src, seq.back().grid.refined(), fb));
      const double order = oracle::convergence_order(seq)[0];
      const bool mag = which == 0;
      if (A == 0.1) {
        s.add("oracle", mag ? "bvp_b_z_richardson_A0.1" : "bvp_e_r_richardson_A0.1", err, 1e-6);
        s.add("oracle", mag ? "bvp_b_z_order_A0.1" : "bvp_e_r_order_A0.1", std::abs(order - 2.0), 0.1);
      } else {
        s.add("oracle", mag ? "bvp_b_z_richardson_A0.2" : "bvp_e_r_richardson_A0.2", err, 1e-6);
        s.add("oracle", mag ? "bvp_b_z_order_A0.2" : "bvp_e_r_order_A0.2", std::abs(order - 2.0), 0.1);
      }
      if (!mag && A == 0.1) {
        oracle::BvpSolution e{grid, oracle::richardson(coarse, fine)};
        const auto p = oracle::integrate_field_to_potential(e, iface, electric::phi_outside(1.0, sc), A);
        double worst = 0.0;
        for (std::size_t i = grid.interface_index(); i < grid.size(); ++i)
          worst = std::max(worst, std::abs(p.values[i] - electric::phi_outside(grid[i] * A, sc)));
        s.add("oracle", "potential_reconstruction_exterior", worst, 1e-6);
      }
    }
  }
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

Report run_verification(Level level) {
  Suite suite;
  specfun_checks(suite);
  magnetic_checks(suite);
  electric_checks(suite);
  oracle_checks(suite);
  if (level == Level::full) bvp_checks(suite);
  return {level, suite.take()};
}

}  // namespace geab::verify
