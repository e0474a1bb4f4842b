// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "cli/run_config.hpp"
#include "geab/electric.hpp"
#include "geab/magnetic.hpp"
#include "geab/oracle/bvp.hpp"
#include "geab/oracle/potential.hpp"
#include "geab/oracle/quadrature.hpp"
#include "geab/specfun.hpp"

namespace {

using namespace geab;
using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

struct Part {
  std::string what;
  double observed;
  double limit;
  bool ok;
};

Part below(std::string what, double observed, double limit) { return {std::move(what), observed, limit, observed < limit}; }
Part at_most(std::string what, double observed, double limit) {
  return {std::move(what), observed, limit, observed <= limit};
}
Part within(std::string what, double observed, double lo, double hi) {
  return {std::move(what) + " in [" + std::to_string(lo).substr(0, 4) + ", " + std::to_string(hi).substr(0, 4) + "]",
          observed, hi, observed >= lo && observed <= hi};
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RadialPoint at(double S) { return RadialPoint::at(S); }

int failures = 0;

void report(int number, const std::string& title, const std::vector<Part>& parts) {
  const bool ok = std::all_of(parts.begin(), parts.end(), [](const Part& p) { return p.ok; });
  if (!ok) ++failures;
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", number, title.c_str());
  for (const auto& p : parts)
    std::printf("       %-4s %s: observed %.6g, limit %.6g\n", p.ok ? "ok" : "BAD", p.what.c_str(), p.observed, p.limit);
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Richardson-extrapolated BVP error on S in [0, 5], coarse 2049 / fine 4097 nodes.
double bvp_error(bool magnetic_case, double A) {
  const PodolskyScale s(A);
  const double iface = s.surface_zeta();
  const auto src = magnetic_case ? oracle::magnetic_source(s) : oracle::electric_source(s);
  const auto fb = magnetic_case ? oracle::FarBoundary::dirichlet_zero : oracle::FarBoundary::robin_decay;
  const auto grid = oracle::RadialGrid::uniform(iface + 20.0, iface, 2049);
  const auto coarse = oracle::solve_radial_bvp(src, grid, fb);
  const auto fine = oracle::solve_radial_bvp(src, grid.refined(), fb);
  const oracle::RealFunction exact = magnetic_case
                                         ? oracle::RealFunction([s](double z) { return magnetic::b_z(at(z * s.A()), s); })
                                         : oracle::RealFunction([s](double z) { return electric::e_r(at(z * s.A()), s); });
  return oracle::relative_sup_error(grid, oracle::richardson(coarse, fine), exact, 0.0, 5.0 / A);
}

void criterion1() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double z = 0.05 * std::pow(500.0 / 0.05, i / 199.0);
    const double w = z * (specfun::bessel_i(0, z, specfun::IScaling::times_exp_minus_z).value() *
                              specfun::bessel_k(1, z, specfun::KScaling::times_exp_plus_z).value() +
                          specfun::bessel_i(1, z, specfun::IScaling::times_exp_minus_z).value() *
                              specfun::bessel_k(0, z, specfun::KScaling::times_exp_plus_z).value());
    worst = std::max(worst, std::abs(w - 1.0));
  }
  report(1, "Wronskian identity on [0.05, 500]",
         {below("max |zeta(I0K1+I1K0) - 1|", worst, 1e-12), below("runtime s", seconds_since(t0), 1.0)});
}

void criterion2() {
  const auto t0 = Clock::now();
  const double e1 = bvp_error(true, 0.1), e2 = bvp_error(true, 0.2);
  report(2, "b_z closed form vs BVP oracle (4096 intervals + Richardson)",
         {at_most("sup rel error A=0.1", e1, 1e-6), at_most("sup rel error A=0.2", e2, 1e-6),
          below("runtime s", seconds_since(t0), 30.0)});
}

void criterion3() {
  const auto t0 = Clock::now();
  const double e1 = bvp_error(false, 0.1), e2 = bvp_error(false, 0.2);
  const double elapsed = seconds_since(t0);
  const PodolskyScale s(0.1);
  double branch = 0.0;
  for (double S : {0.3, 0.7, 1.5, 3.0})
    branch = std::max(branch, rel(electric::e_r(at(S), s, electric::FieldMethod::large_ratio), electric::e_r(at(S), s)));
  report(3, "e_r closed form vs BVP oracle; exact vs large_ratio",
         {at_most("sup rel error A=0.1", e1, 1e-6), at_most("sup rel error A=0.2", e2, 1e-6),
          below("runtime s", elapsed, 30.0), below("max rel branch difference A=0.1", branch, 1e-8)});
}

void criterion4() {
  std::vector<Part> parts;
  for (double A : {0.1, 0.2}) {
    const PodolskyScale s(A);
    const std::string tag = " A=" + std::to_string(A).substr(0, 3);
    parts.push_back(below("b_z jump" + tag, std::abs(magnetic::b_z_inside(1, s) - magnetic::b_z_outside(1, s)), 1e-8));
    parts.push_back(below("b_z' jump" + tag,
                          std::abs(magnetic::b_z_slope_inside(1, s) - magnetic::b_z_slope_outside(1, s)), 1e-8));
    parts.push_back(
        below("a_phi jump" + tag, std::abs(magnetic::a_phi_inside(1, s) - magnetic::a_phi_outside(1, s)), 1e-8));
    parts.push_back(below("a_phi' jump" + tag,
                          std::abs(magnetic::a_phi_slope_inside(1, s) - magnetic::a_phi_slope_outside(1, s)), 1e-8));
    parts.push_back(below("e_r jump" + tag, std::abs(electric::e_r_inside(1, s) - electric::e_r_outside(1, s)), 1e-8));
    parts.push_back(below("e_r' jump" + tag,
                          std::abs(electric::e_r_slope_inside(1, s) - electric::e_r_slope_outside(1, s)), 1e-8));
  }
  report(4, "Continuity of field and derivative at the wall", parts);
}

void criterion5() {
  std::vector<Part> parts;
  const PodolskyScale sm(0.1);
  for (double S : {0.4, 0.8, 1.3, 2.0}) {
    auto err = [&](double h) {
      const double curl =
          ((S + h) * magnetic::a_phi(at(S + h), sm) - (S - h) * magnetic::a_phi(at(S - h), sm)) / (2 * h) / S;
      return std::abs(curl - magnetic::b_z(at(S), sm));
    };
    parts.push_back(within("curl ratio S=" + std::to_string(S).substr(0, 3), err(0.02) / err(0.01), 3.6, 4.4));
  }
  const PodolskyScale se(0.15);
  for (double S : {0.3, 0.6, 1.4, 2.0}) {
    auto err = [&](double h) {
      return std::abs(-(electric::phi(at(S + h), se) - electric::phi(at(S - h), se)) / (2 * h) -
                      electric::e_r(at(S), se));
    };
    parts.push_back(within("gradient ratio S=" + std::to_string(S).substr(0, 3), err(0.02) / err(0.01), 3.6, 4.4));
  }
  report(5, "FD curl and gradient consistency, second order", parts);
}

void criterion6() {
  const PodolskyScale s(0.01);
  report(6, "Maxwell limits at A=0.01",
         {below("|b_z(0.5) - 1|", std::abs(magnetic::b_z(at(0.5), s) - 1.0), 1e-12),
          below("|b_z(2)|", std::abs(magnetic::b_z(at(2.0), s)), 1e-12),
          below("|3 e_r(3) - 1|", std::abs(3.0 * electric::e_r(at(3.0), s) - 1.0), 1e-12),
          below("|a_phi(3) - 1/6|", std::abs(magnetic::a_phi(at(3.0), s) - 1.0 / 6.0), 1e-12)});
}

void criterion7() {
  report(7, "Surface half value",
         {at_most("|b_z(1, A=0.01) - 0.5|", std::abs(magnetic::b_z(at(1.0), PodolskyScale(0.01)) - 0.5), 0.01)});
}

void criterion8() {
  const double A = 0.05;
  const PodolskyScale s(A);
  const double at_wall = std::abs(magnetic::delta_g_ratio(at(1.0), s).correction - A);
  double violations = 0.0;
  double prev = magnetic::delta_g_ratio(at(1.0), s).correction;
  for (int i = 1; i <= 3000; ++i) {
    const double cur = magnetic::delta_g_ratio(at(1.0 + 3.0 * i / 3000.0), s).correction;
    if (!(cur < prev)) violations += 1.0;
    prev = cur;
  }
  double loop = 0.0;
  for (double S : {1.0, 1.2, 2.0}) {
    const auto l = oracle::loop_phase_numeric([&](double r) { return magnetic::a_phi(at(r), s); }, S);
    const double bound = std::exp(-(S - 1.0) / A) * 10 * A * A;
    loop = std::max(loop, std::abs(l.azimuthal_sum / kPi - magnetic::delta_g_ratio(at(S), s).ratio) / bound);
  }
  report(8, "Magnetic phase correction",
         {at_most("|delta_g(1) - A|", at_wall, 0.0), at_most("monotonicity violations on (1, 4]", violations, 0.0),
          at_most("loop vs formula / (e^{-(S-1)/A} 10 A^2), S in {1, 1.2, 2}", loop, 1.0)});
}

void criterion9() {
  const PodolskyScale s(0.01);
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const auto f = magnetic::delta_g_flyby(s, i / 100.0);
    worst = std::max(worst, std::abs(f.first_order - f.unexpanded));
  }
  report(9, "Flyby first order vs unexpanded at A=0.01, eps in [0, 1]",
         {below("max |difference| / A", worst / 0.01, 0.02)});
}

void criterion10() {
  const PodolskyScale s(0.1);
  double null = 0.0, anti = 0.0;
  for (auto m : {electric::PotentialMethod::exact, electric::PotentialMethod::expansion,
                 electric::PotentialMethod::asymptotic}) {
    for (double S : {0.0, 0.3, 0.9}) null = std::max(null, std::abs(electric::delta_phi_podolsky({S, S, 1, 1}, s, m)));
    const double f = electric::delta_phi_podolsky({0.1, 0.7, 1, 1}, s, m);
    const double b = electric::delta_phi_podolsky({0.7, 0.1, 1, 1}, s, m);
    anti = std::max(anti, std::abs(f + b) / std::abs(f));
  }
  const auto q = oracle::quadrature([&](double S) { return electric::e_r(at(S), s); }, 0.0, 0.5, 1e-16);
  const double dphi = electric::delta_phi_podolsky({0.0, 0.5, 1, 1}, s, electric::PotentialMethod::exact);
  report(10, "Electric phase null, antisymmetry and oracle",
         {at_most("max |dphi(S, S)|", null, 0.0), at_most("relative antisymmetry defect", anti, 1e-15),
          at_most("rel error dphi(0, 0.5) vs quadrature, A=0.1", rel(dphi, -q.value), 1e-6)});
}

void criterion11() {
  std::vector<Part> parts;
  for (double z : {1.0, 2.0, 4.0}) {
    const std::string tag = " zeta=" + std::to_string(static_cast<int>(z));
    const auto qi = oracle::quadrature([](double t) { return specfun::bessel_i(0, t).value(); }, 0.0, z, 1e-14);
    parts.push_back(at_most("int I0" + tag, rel(specfun::bessel_i0_integral(z).value(), qi.value), 1e-10));
    const auto qk = oracle::quadrature([](double t) { return specfun::bessel_k(0, t).value(); }, 0.0, z, 1e-13, 20000);
    parts.push_back(at_most("int K0" + tag, rel(specfun::bessel_k0_integral(z), qk.value), 1e-10));
    const auto ql = oracle::quadrature([](double t) { return specfun::struve_l(0, t).value(); }, 0.0, z, 1e-14);
    const double closed = z * z / kPi * specfun::hyp_pfq({{1, 1}, {1, 1}}, {{3, 2}, {3, 2}, {2, 1}}, z * z / 4).value();
    parts.push_back(at_most("int L0" + tag, rel(closed, ql.value), 1e-10));
  }
  report(11, "Hypergeometric antiderivative identities", parts);
}

double maxwell_value(Quantity q, double S) {
  switch (q) {
    case Quantity::b_z: return S <= 1.0 ? 1.0 : 0.0;
    case Quantity::a_phi: return S <= 1.0 ? S / 2.0 : 0.5 / S;
    default: return S < 1.0 ? 0.0 : 1.0 / S;
  }
}

void criterion12() {
  std::vector<Part> parts;
  for (auto [scenario, quantity, q] : {std::tuple{"solenoid", "b_z", Quantity::b_z},
                                       std::tuple{"solenoid", "a_phi", Quantity::a_phi},
                                       std::tuple{"tube", "e_r", Quantity::e_r}}) {
    auto table = [&](const char* A) {
      return cli::cmd_profile(cli::build_run_config(
          {{"scenario", scenario}, {"quantity", quantity}, {"A", A}, {"s-min", "0"}, {"s-max", "3"}, {"s-count", "301"}}));
    };
    const auto near = table("0.05");
    const auto far = table("0.2");
    double violations = 0.0;
    for (std::size_t i = 0; i < near.rows.size(); ++i) {
      const double S = std::get<double>(near.rows[i][0]);
      const double dn = std::abs(std::get<double>(near.rows[i][1]) - maxwell_value(q, S));
      const double df = std::abs(std::get<double>(far.rows[i][1]) - maxwell_value(q, S));
      if (df == 0.0 ? dn != 0.0 : !(dn < df)) violations += 1.0;
    }
    parts.push_back(at_most(std::string(quantity) + " points where A=0.05 is not closer", violations, 0.0));
  }
  report(12, "Profiles: smaller A closer to Maxwell on S in [0, 3]", parts);
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"geab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void criterion13() {
  int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  auto t0 = Clock::now();
  const std::string fast1 = run_cli({"verify", "--level", "fast", "--format", "json"}, c1);
  const double fast_time = seconds_since(t0);
  const std::string fast2 = run_cli({"verify", "--level", "fast", "--format", "json"}, c2);
  t0 = Clock::now();
  const std::string full1 = run_cli({"verify", "--level", "full", "--format", "json"}, c3);
  const double full_time = seconds_since(t0);
  const std::string full2 = run_cli({"verify", "--level", "full", "--format", "json"}, c4);
  report(13, "verify timing and determinism",
         {below("verify fast s", fast_time, 10.0), below("verify full s", full_time, 120.0),
          at_most("nonzero exit codes", (c1 != 0) + (c2 != 0) + (c3 != 0) + (c4 != 0), 0.0),
          at_most("reports differing between runs", (fast1 != fast2) + (full1 != full2), 0.0)});
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2,  criterion3,  criterion4, criterion5,
                                                    criterion6, criterion7,  criterion8,  criterion9, criterion10,
                                                    criterion11, criterion12, criterion13};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL (exception: %s)\n", e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
