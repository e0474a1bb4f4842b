#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "detail/quadrature_rules.hpp"
#include "detail/series.hpp"
#include "geab/errors.hpp"
#include "geab/specfun.hpp"

namespace geab::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
// Below: K from the logarithmic power series. Above kAsymptoticJoint both I
// and K use the large-argument expansion; K in between is a trapezoid sum.
constexpr double kKSeriesMax = 2.0;
constexpr double kAsymptoticJoint = 25.0;

void check_order(int order, const char* who) {
  if (order != 0 && order != 1)
    throw InvalidArgument(std::string(who) + ": order must be 0 or 1, got " + std::to_string(order));
}

// e^{-z} I_n(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(n) / z^k.
double i_asymptotic_scaled(int n, double z) {
  const double mu = 4.0 * n * n;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * ((2.0 * k - 1.0) * (2.0 * k - 1.0) - mu) / (8.0 * k * z);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

// e^{z} K_n(z) ~ (pi / 2z)^{1/2} sum_k a_k(n) / z^k.
double k_asymptotic_scaled(int n, double z) {
  const double mu = 4.0 * n * n;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * z);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum * std::sqrt(std::numbers::pi / (2.0 * z));
}

// A&S 9.6.13 / 9.6.11 with psi(k+1) = -gamma + H_k.
long double k_series(int n, double z) {
  const long double x = z;
  const long double q = x * x / 4.0L;
  const long double log_half = std::log(x / 2.0L);
  if (n == 0) {
    long double term = 1.0L;
    long double harmonic = 0.0L;
    long double sum = 0.0L;
    for (int k = 1; k < 200; ++k) {
      term *= q / (static_cast<long double>(k) * k);
      harmonic += 1.0L / k;
      sum += term * harmonic;
      if (term * harmonic < 1e-21L * std::fabs(sum)) break;
    }
    return -(log_half + kEulerGamma) * detail::bessel_i_series(0, z) + sum;
  }
  long double term = 1.0L;  // q^k / (k! (k+1)!)
  long double h_k = 0.0L;
  long double sum = 2.0L * -kEulerGamma + 1.0L;  // psi(1) + psi(2)
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + 1));
    h_k += 1.0L / k;
    const long double psi_sum = -2.0L * kEulerGamma + 2.0L * h_k + 1.0L / (k + 1);
    sum += term * psi_sum;
    if (std::fabs(term * psi_sum) < 1e-21L * std::fabs(sum)) break;
  }
  return 1.0L / x + log_half * detail::bessel_i_series(1, z) - x / 4.0L * sum;
}

// e^{z} K_n(z) = int_0^inf exp(-z (cosh t - 1)) cosh(n t) dt.
double k_integral_scaled(int n, double z) {
  const double h = std::min(0.1, 0.7 / std::sqrt(z));
  const double t_max = std::acosh(1.0 + 45.0 / z);
  return detail::even_trapezoid(
      [&](double t) { return std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(n * t); }, h, t_max);
}

}  // namespace

ScaledValue bessel_i(int order, double z, IScaling scaling) {
  check_order(order, "bessel_i");
  if (!(z >= 0.0) || std::isinf(z)) throw DomainError("bessel_i: z must be finite and >= 0");
  const bool scaled = scaling == IScaling::times_exp_minus_z;
  if (z <= kAsymptoticJoint) {
    const long double s = detail::bessel_i_series(order, z);
    if (scaled) return ScaledValue::from_double(static_cast<double>(s * std::exp(-static_cast<long double>(z))));
    return ScaledValue::from_double(static_cast<double>(s));
  }
  const double s = i_asymptotic_scaled(order, z);
  return ScaledValue{s, scaled ? 0.0 : z}.normalized();
}

ScaledValue bessel_k(int order, double z, KScaling scaling) {
  check_order(order, "bessel_k");
  if (!(z > 0.0) || std::isinf(z)) throw DomainError("bessel_k: z must be finite and > 0");
  const bool scaled = scaling == KScaling::times_exp_plus_z;
  if (z <= kKSeriesMax) {
    const long double s = k_series(order, z);
    if (scaled) return ScaledValue::from_double(static_cast<double>(s * std::exp(static_cast<long double>(z))));
    return ScaledValue::from_double(static_cast<double>(s));
  }
  const double s = z <= kAsymptoticJoint ? k_integral_scaled(order, z) : k_asymptotic_scaled(order, z);
  return ScaledValue{s, scaled ? 0.0 : -z}.normalized();
}

}  // namespace geab::specfun
