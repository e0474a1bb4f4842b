#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "detail/quadrature_rules.hpp"
#include "geab/errors.hpp"
#include "geab/specfun.hpp"

namespace geab::specfun {

namespace {

constexpr double kJSeriesMax = 3.0;

const std::vector<Rational> kI0Numerators{Rational{1, 2}};
const std::vector<Rational> kI0Denominators{Rational{1, 1}, Rational{3, 2}};
const std::vector<Rational> kL0Numerators{Rational{1, 1}, Rational{1, 1}};
const std::vector<Rational> kL0Denominators{Rational{3, 2}, Rational{3, 2}, Rational{2, 1}};

}  // namespace

ScaledValue bessel_i0_integral(double z) {
  if (!(z >= 0.0) || std::isinf(z)) throw DomainError("bessel_i0_integral: z must be finite and >= 0");
  if (z == 0.0) return {};
  return hyp_pfq(kI0Numerators, kI0Denominators, z * z / 4.0) * z;
}

double bessel_k0_integral(double z) {
  if (!(z >= 0.0) || std::isinf(z)) throw DomainError("bessel_k0_integral: z must be finite and >= 0");
  if (z == 0.0) return 0.0;
  const ScaledValue bracket = bessel_k(0, z) * struve_l(-1, z) + bessel_k(1, z) * struve_l(0, z);
  return (std::numbers::pi / 2.0 * z * bracket).to_double();
}

ScaledValue bessel_k0_tail_integral(double z) {
  if (!(z > 0.0) || std::isinf(z)) throw DomainError("bessel_k0_tail_integral: z must be finite and > 0");
  // e^{z} int_z^inf K_0 = int_0^inf exp(-z (cosh u - 1)) / cosh u du.
  const double h = std::min(0.1, 0.7 / std::sqrt(z));
  const double u_max = std::acosh(1.0 + 45.0 / z);
  const double s = detail::even_trapezoid(
      [z](double u) { return std::exp(-z * (std::cosh(u) - 1.0)) / std::cosh(u); }, h, u_max);
  return ScaledValue{s, -z}.normalized();
}

double struve_minus_bessel_integral(double z) {
  if (!(z >= 0.0) || std::isinf(z)) throw DomainError("struve_minus_bessel_integral: z must be finite and >= 0");
  if (z == 0.0) return 0.0;
  if (z <= kJSeriesMax) {
    const double x = z * z / 4.0;
    const double l0 = z * z / std::numbers::pi * hyp_pfq(kL0Numerators, kL0Denominators, x).value();
    return l0 - bessel_i0_integral(z).value();
  }
  // -(2/pi) int_0^{pi/2} (1 - exp(-z sin t)) / sin t dt; the integrand
  // changes on the scale 1/z near t = 0, so split geometrically there.
  auto f = [z](double t) {
    const double s = std::sin(t);
    return s == 0.0 ? z : -std::expm1(-z * s) / s;
  };
  double lo = 0.0;
  double hi = std::min(std::numbers::pi / 2.0, 1.0 / z);
  double sum = 0.0;
  while (true) {
    sum += detail::tanh_sinh(f, lo, hi);
    if (hi >= std::numbers::pi / 2.0) break;
    lo = hi;
    hi = std::min(std::numbers::pi / 2.0, 4.0 * hi);
  }
  return -2.0 / std::numbers::pi * sum;
}

}  // namespace geab::specfun
