#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "geab/electric.hpp"
#include "geab/errors.hpp"
#include "geab/oracle/boundary_system.hpp"
#include "geab/oracle/quadrature.hpp"
#include "geab/specfun.hpp"
#include "geab/units.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

namespace el = geab::electric;
namespace sf = geab::specfun;
using el::FieldMethod;
using el::PotentialMethod;
using geab::PodolskyScale;
using geab::RadialPoint;
using geab::test::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;
RadialPoint at(double S) { return RadialPoint::at(S); }

el::BeamPairGeometry beams(double S1, double S2, double t = 1e-8, double q = -1.602176634e-19) {
  return {S1, S2, t, q};
}

// zeta^2 E'' + zeta E' - zeta^2 E by central differences.
template <class F>
double bessel_operator(F e, double zeta, double h) {
  const double d2 = (e(zeta + h) - 2.0 * e(zeta) + e(zeta - h)) / (h * h);
  const double d1 = (e(zeta + h) - e(zeta - h)) / (2.0 * h);
  return zeta * zeta * d2 + zeta * d1 - zeta * zeta * e(zeta);
}

double oracle_delta_phi(double S1, double S2, PodolskyScale s) {
  auto field = [&](double S) { return el::e_r(at(S), s); };
  return -geab::oracle::quadrature(field, S1, S2, 1e-16).value;
}

}  // namespace

TEST(Electric, EffectiveSource) {
  EXPECT_EQ(el::e_eff(at(0.5)), 0.0);
  EXPECT_EQ(el::e_eff(at(1.0)), 1.0);
  EXPECT_EQ(el::e_eff(at(2.0)), 0.5);
}

TEST(ElectricBoundary, MatchesReferenceTable) {
  for (const auto& row : geab::testref::kBoundaryCoefficients) {
    const PodolskyScale s(row[0]);
    const auto c = el::boundary_coeffs(s);
    EXPECT_LT(rel_err((c.b1 * geab::ScaledValue::exp(1.0 / row[0])).value(), row[1]), 1e-12) << row[0];
    EXPECT_LT(rel_err((c.b4 * geab::ScaledValue::exp(-1.0 / row[0])).value(), row[2]), 1e-12) << row[0];
  }
}

TEST(ElectricBoundary, ClosedFormMatchesLinearSolve) {
  for (double A : {0.01, 0.05, 0.1, 0.2, 0.5}) {
    const PodolskyScale s(A);
    const auto closed = el::boundary_coeffs(s);
    const auto solved = geab::oracle::boundary_coeffs_by_linear_solve(s);
    EXPECT_LT(std::abs((closed.b1 / solved.b1).value() - 1.0), 1e-10) << A;
    EXPECT_LT(std::abs((closed.b4 / solved.b4).value() - 1.0), 1e-10) << A;
  }
}

TEST(ElectricBoundary, SignsAndSmallAVanishing) {
  for (double A : {0.05, 0.1, 0.2}) {
    const auto c = el::boundary_coeffs(PodolskyScale(A));
    EXPECT_GT(c.b1.sign(), 0) << A;
    EXPECT_LT(c.b4.sign(), 0) << A;
  }
  // b1 approaches sqrt(pi/(2A)) e^{-1/A} from below.
  double prev_ratio = 0.0;
  for (double A : {0.2, 0.05, 0.01, 0.002}) {
    const PodolskyScale s(A);
    const double ratio = (el::boundary_coeffs(s).b1 * geab::ScaledValue::exp(1.0 / A)).value() /
                         std::sqrt(kPi / (2.0 * A));
    EXPECT_LT(ratio, 1.0);
    EXPECT_GT(ratio, prev_ratio);
    prev_ratio = ratio;
  }
  // leading correction is -5A/8
  EXPECT_GT(prev_ratio, 1.0 - 0.002);
  EXPECT_LT(el::e_r(at(0.01), PodolskyScale(0.002)), 1e-200);
}

TEST(ElectricField, MatchesReferenceTable) {
  for (const auto& row : geab::testref::kFields) {
    EXPECT_LT(rel_err(el::e_r(at(row[1]), PodolskyScale(row[0])), row[4]), 1e-12) << row[0] << " " << row[1];
  }
}

TEST(ElectricField, ExactAndLargeRatioAgree) {
  const PodolskyScale s(0.1);
  for (double S : {0.3, 0.7, 1.5, 3.0}) {
    EXPECT_LT(rel_err(el::e_r(at(S), s, FieldMethod::large_ratio), el::e_r(at(S), s)), 1e-8) << S;
  }
}

TEST(ElectricField, LargeRatioRequiresSmallA) {
  EXPECT_THROW(el::e_r(at(0.5), PodolskyScale(0.3), FieldMethod::large_ratio), geab::InvalidMethod);
  EXPECT_NO_THROW(el::e_r(at(0.5), PodolskyScale(0.25), FieldMethod::large_ratio));
}

TEST(ElectricField, AsymptoticAxisValue) {
  const double want = std::sqrt(kPi / 0.1) * std::exp(-20.0);
  EXPECT_LT(rel_err(el::e_r(at(0.0), PodolskyScale(0.05), FieldMethod::asymptotic), want), 1e-14);
}

TEST(ElectricField, FarFieldIsMaxwell) {
  for (FieldMethod m : {FieldMethod::exact, FieldMethod::large_ratio, FieldMethod::asymptotic}) {
    for (double A : {0.05, 0.2}) {
      const PodolskyScale s(A);
      EXPECT_NEAR(el::e_r(at(1e3), s, m) * 1e3, 1.0, 1e-6) << A;
    }
  }
}

TEST(ElectricField, ContinuityAtWall) {
  for (double A : {0.1, 0.2}) {
    const PodolskyScale s(A);
    EXPECT_LT(std::abs(el::e_r_inside(1.0, s) - el::e_r_outside(1.0, s)), 1e-8) << A;
    EXPECT_LT(std::abs(el::e_r_slope_inside(1.0, s) - el::e_r_slope_outside(1.0, s)), 1e-8) << A;
  }
}

TEST(ElectricField, SlopesMatchFiniteDifferences) {
  const PodolskyScale s(0.1);
  const double h = 1e-5;
  for (double S : {0.2, 0.8, 1.3, 2.0}) {
    const double fd = (el::e_r(at(S + h), s) - el::e_r(at(S - h), s)) / (2 * h);
    const double sl = S < 1 ? el::e_r_slope_inside(S, s) : el::e_r_slope_outside(S, s);
    EXPECT_NEAR(fd, sl, 1e-7) << S;
  }
}

TEST(ElectricProperties, FieldEquationResidualsAreSecondOrder) {
  for (double A : {0.1, 0.2}) {
    const PodolskyScale s(A);
    auto e_in = [&](double z) { return el::e_r_inside(z * A, s); };
    auto e_out = [&](double z) { return el::e_r_outside(z * A, s); };
    const double zi = 0.7 / A;
    const double r1 = std::abs(bessel_operator(e_in, zi, 0.04));
    const double r2 = std::abs(bessel_operator(e_in, zi, 0.02));
    EXPECT_NEAR(r1 / r2, 4.0, 0.4) << A;
    const double zo = 1.4 / A;
    const double o1 = std::abs(bessel_operator(e_out, zo, 0.04) + zo / A);
    const double o2 = std::abs(bessel_operator(e_out, zo, 0.02) + zo / A);
    EXPECT_NEAR(o1 / o2, 4.0, 0.4) << A;
  }
}

TEST(ElectricProperties, StruveParticularSolution) {
  const double A = 0.1;
  auto part = [&](double z) { return -kPi / 2.0 / A * sf::struve_l(0, z).value(); };
  auto part_m = [&](double z) { return -kPi / 2.0 / A * sf::struve_minus_bessel(0, z); };
  for (double z : {2.0, 8.0}) {
    const double r1 = std::abs(bessel_operator(part, z, 0.04) + z / A);
    const double r2 = std::abs(bessel_operator(part, z, 0.02) + z / A);
    EXPECT_NEAR(r1 / r2, 4.0, 0.4) << z;
    EXPECT_LT(std::abs(bessel_operator(part_m, z, 1e-3) + z / A), 1e-4 * z / A) << z;
  }
}

TEST(ElectricProperties, InteriorFieldIsScreened) {
  // |e_r| <= sqrt(pi/(2A)) e^{-1/A} I_0(S/A), with equality approached on the axis.
  for (double A : {0.01, 0.05, 0.1}) {
    const PodolskyScale s(A);
    const double bound0 = std::sqrt(kPi / (2 * A)) * std::exp(-1.0 / A);
    EXPECT_LE(std::abs(el::e_r(at(0.0), s)), bound0) << A;
    for (int i = 0; i < 100; ++i) {
      const double S = 0.0099 * i;
      const double bound = bound0 * sf::bessel_i(0, S / A).value();
      EXPECT_LE(std::abs(el::e_r(at(S), s)), bound) << A << " " << S;
    }
  }
}

TEST(ElectricProperties, ExteriorApproachesMaxwellExponentially) {
  const double A = 0.1;
  const PodolskyScale s(A);
  double c_fit = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double S = 2.0 + i / 100.0;
    const double dev = std::abs(S * el::e_r(at(S), s, FieldMethod::asymptotic) - 1.0);
    c_fit = std::max(c_fit, dev * std::exp((S - 1.0) / A));
  }
  EXPECT_LT(c_fit, 1.0);
  EXPECT_GT(c_fit, 0.5);
}

TEST(ElectricProperties, ExactExteriorCarriesAlgebraicTail) {
  // S e_r - 1 ~ A^2 / S^2 from the asymptotic series of L_0 - I_0.
  const double A = 0.01;
  const double dev = 3.0 * el::e_r(at(3.0), PodolskyScale(A)) - 1.0;
  EXPECT_LT(rel_err(dev, A * A / 9.0), 1e-3);
}

TEST(ElectricPotential, GradientIsField) {
  const PodolskyScale s(0.15);
  for (double S : {0.3, 0.6, 1.4}) {
    auto grad = [&](double h) { return -(el::phi(at(S + h), s) - el::phi(at(S - h), s)) / (2 * h); };
    const double e = el::e_r(at(S), s);
    const double d1 = std::abs(grad(0.02) - e);
    const double d2 = std::abs(grad(0.01) - e);
    EXPECT_GT(d1 / d2, 3.6) << S;
    EXPECT_LT(d1 / d2, 4.4) << S;
  }
}

TEST(ElectricPotential, AxisValueIsGauge) {
  const PodolskyScale s(0.1);
  EXPECT_EQ(el::phi(at(0.0), s, {2.5, -1.0}), 2.5);
  EXPECT_EQ(el::phi(at(0.0), s), 0.0);
}

TEST(ElectricPotential, ContinuousGauge) {
  const PodolskyScale s(0.1);
  const auto g = el::continuous_exterior_gauge(s, 0.25);
  const double in = el::phi({1.0, geab::Region::inside}, s, g);
  const double out = el::phi(at(1.0), s, g);
  EXPECT_NEAR(in, out, 1e-14);
}

TEST(ElectricPotential, FarFieldIsLogarithmic) {
  const double A = 0.1;
  const PodolskyScale s(A);
  // phi in sigma R/eps0 with S as radius: phi ~ -ln S.
  const double d = el::phi(at(40.0), s) - el::phi(at(20.0), s);
  EXPECT_NEAR(d, -std::log(2.0), 1e-4);
}

TEST(ElectricPotential, RefusesHugeZeta) {
  EXPECT_THROW(el::phi(at(0.9), PodolskyScale(1e-3)), geab::DomainError);
  EXPECT_NO_THROW(el::phi(at(0.5), PodolskyScale(1e-3)));
}

TEST(ElectricPotential, AsymptoticFormIsContinuousAndZeroOnAxis) {
  const PodolskyScale s(1e-3);
  EXPECT_EQ(el::phi_asymptotic(at(0.0), s), 0.0);
  EXPECT_NEAR(el::phi_asymptotic({1.0, geab::Region::inside}, s), el::phi_asymptotic(at(1.0), s), 1e-15);
  EXPECT_NEAR(el::phi_asymptotic(at(5.0), s) - el::phi_asymptotic(at(2.0), s), -std::log(2.5), 1e-12);
}

TEST(ElectricExpansion, ExpansionPointValue) {
  const double A = 0.1;
  const PodolskyScale s(A);
  const auto v = el::phi_interior_expansion(at(A), s);
  const double b1 = el::boundary_coeffs(s).b1.value();
  EXPECT_LT(rel_err(v.value, -A * b1 * sf::bessel_i(0, 1.0).value()), 1e-14);
  EXPECT_TRUE(v.within_validity);
  EXPECT_FALSE(el::phi_interior_expansion(at(0.25), s).within_validity);
}

TEST(ElectricExpansion, SlopeAtExpansionPointIsField) {
  const double A = 0.1;
  const PodolskyScale s(A);
  const double h = 1e-6;
  const double slope =
      (el::phi_interior_expansion(at(A + h), s).value - el::phi_interior_expansion(at(A - h), s).value) / (2 * h);
  EXPECT_LT(rel_err(-slope, el::e_r(at(A), s)), 1e-8);
}

TEST(ElectricExpansion, WithinCubicRemainder) {
  const double A = 0.1;
  const PodolskyScale s(A);
  const double S = 1.5 * A;
  const double approx = el::phi_interior_expansion(at(S), s).value - el::phi_interior_expansion(at(A), s).value;
  const double exact = el::phi(at(S), s) - el::phi(at(A), s);
  const double b1 = el::boundary_coeffs(s).b1.value();
  const double bound = std::abs(b1) * sf::bessel_i(0, 1.5).value() / 24.0 * std::pow(0.5, 4);
  EXPECT_LT(std::abs(approx - exact), A * bound);
}

TEST(ElectricPhase, EqualOffsetsCancelExactly) {
  for (PotentialMethod m : {PotentialMethod::exact, PotentialMethod::expansion, PotentialMethod::asymptotic}) {
    for (double S : {0.0, 0.37, 0.99}) {
      EXPECT_EQ(el::delta_phi_podolsky(beams(S, S), PodolskyScale(0.1), m), 0.0);
    }
  }
}

TEST(ElectricPhase, Antisymmetric) {
  const PodolskyScale s(0.1);
  for (PotentialMethod m : {PotentialMethod::exact, PotentialMethod::expansion, PotentialMethod::asymptotic}) {
    const double f = el::delta_phi_podolsky(beams(0.2, 0.8), s, m);
    const double b = el::delta_phi_podolsky(beams(0.8, 0.2), s, m);
    EXPECT_LE(std::abs(f + b), 1e-15 * std::abs(f));
  }
}

TEST(ElectricPhase, ExactMatchesQuadrature) {
  for (double A : {0.05, 0.1, 0.2}) {
    const PodolskyScale s(A);
    for (auto [S1, S2] : {std::pair{0.0, 0.5}, std::pair{0.3, 0.9}}) {
      EXPECT_LT(rel_err(el::delta_phi_podolsky(beams(S1, S2), s), oracle_delta_phi(S1, S2, s)), 1e-10);
    }
  }
}

TEST(ElectricPhase, ApproximateMethodsTrackTheirOwnErrors) {
  // The asymptotic route differs from the expansion only through b1.
  const PodolskyScale s(0.1);
  const auto g = beams(0.0, 0.5);
  const double expansion = el::delta_phi_podolsky(g, s, PotentialMethod::expansion);
  const double asymptotic = el::delta_phi_podolsky(g, s, PotentialMethod::asymptotic);
  const double b1 = el::boundary_coeffs(s).b1.value();
  EXPECT_LT(rel_err(asymptotic / expansion, std::sqrt(kPi / 0.2) * std::exp(-10.0) / b1), 1e-13);
  // Near the axis the field is constant to O(zeta^2).
  const auto near = beams(0.0, 0.01);
  EXPECT_LT(rel_err(el::delta_phi_near_axis(near, s), el::delta_phi_podolsky(near, s)), 0.06);
  EXPECT_GT(el::delta_phi_near_axis(near, s) * el::delta_phi_podolsky(near, s), 0.0);
}

TEST(ElectricPhase, RejectsBadGeometry) {
  const PodolskyScale s(0.1);
  EXPECT_THROW(el::delta_phi_podolsky(beams(0.0, 1.0), s), geab::DomainError);
  EXPECT_THROW(el::delta_phi_podolsky(beams(-0.1, 0.5), s), geab::DomainError);
  EXPECT_THROW(el::delta_g_electric(beams(0.0, 0.5, 0.0), 1.0), geab::DomainError);
}

TEST(ElectricPhase, PhaseFromPotential) {
  EXPECT_EQ(el::delta_g_electric(beams(0.1, 0.2), 0.0), 0.0);
  const double once = el::delta_g_electric(beams(0.1, 0.2, 1e-8), 1e-6);
  const double twice = el::delta_g_electric(beams(0.1, 0.2, 2e-8), 1e-6);
  EXPECT_DOUBLE_EQ(twice, 2.0 * once);
  const double e = 1.602176634e-19, hbar = 1.054571817e-34;
  EXPECT_LT(rel_err(once, e * 1e-8 * 1e-6 / hbar), 1e-15);
}

TEST(ElectricPhase, SiWrapper) {
  const el::TubeConfig tube{1e-2, 1e-9, 1e-3};
  const auto g = beams(0.2, 0.6);
  const auto r = el::delta_g_electric_si(tube, g, 1e-6);
  const double volts = 1e-9 * 1e-2 / geab::si::eps0;
  EXPECT_LT(rel_err(r.podolsky_delta_phi_V, el::delta_phi_podolsky(g, PodolskyScale(0.1)) * volts), 1e-14);
  EXPECT_DOUBLE_EQ(r.maxwell_phase, el::delta_g_electric(g, 1e-6));
  EXPECT_DOUBLE_EQ(r.total_phase(), r.maxwell_phase + r.podolsky_phase);
  EXPECT_THROW(el::delta_g_electric_si({1e-2, 1e-9, 2e-2}, g, 0.0), geab::DomainError);
}
