#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "detail/quadrature_rules.hpp"
#include "detail/series.hpp"
#include "geab/errors.hpp"
#include "geab/specfun.hpp"

namespace geab {

namespace detail {

long double bessel_i_series(int n, double z) {
  const long double x = z;
  const long double q = x * x / 4.0L;
  long double term = n == 0 ? 1.0L : x / 2.0L;
  long double sum = term;
  for (int k = 1; k < 2000; ++k) {
    term *= q / (static_cast<long double>(k) * (k + n));
    sum += term;
    if (term <= 1e-21L * sum) break;
  }
  return sum;
}

bool struve_l_series(int nu, double z, double rel_tol, int max_terms, long double& out) {
  const long double x = z;
  const long double half = x / 2.0L;
  const long double q = half * half;
  const long double pi = std::numbers::pi_v<long double>;
  long double term = 0.0L;
  switch (nu) {
    case -1: term = 2.0L / pi; break;
    case 0: term = 2.0L * x / pi; break;
    default: term = 2.0L * x * x / (3.0L * pi); break;
  }
  long double sum = term;
  if (term == 0.0L) {
    out = 0.0L;
    return true;
  }
  for (int k = 0; k + 1 < max_terms; ++k) {
    const long double ratio = q / ((k + 1.5L) * (k + nu + 1.5L));
    term *= ratio;
    sum += term;
    if (ratio < 1.0L && term <= rel_tol * sum) {
      out = sum;
      return true;
    }
  }
  out = sum;
  return false;
}

}  // namespace detail

namespace specfun {

namespace {

constexpr double kSeriesDifferenceMax = 6.0;

void check_struve_order(int order) {
  if (order != 0 && order != 1)
    throw InvalidArgument("struve_minus_bessel: order must be 0 or 1, got " + std::to_string(order));
}

// Terms t_k of the large-z expansion of L_nu - I_nu, optimally truncated.
// first = 0 includes the leading term, first = 1 omits it.
double asymptotic_sum(int nu, double z, int first) {
  const double q = (z / 2.0) * (z / 2.0);
  double term = nu == 0 ? -2.0 / (std::numbers::pi * z) : -2.0 / std::numbers::pi;
  double sum = first == 0 ? term : 0.0;
  for (int k = 0; k < 500; ++k) {
    const double next = term * (k + 0.5) * (k + 0.5 - nu) / q;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// L_0 - I_0 = -(2/pi) int_0^{pi/2} exp(-z sin t) dt.
double laplace_m0(double z) {
  const double split = std::min(std::numbers::pi / 2.0, 2.0 / z);
  auto f = [z](double t) { return std::exp(-z * std::sin(t)); };
  double v = detail::tanh_sinh(f, 0.0, split);
  if (split < std::numbers::pi / 2.0) v += detail::tanh_sinh(f, split, std::numbers::pi / 2.0);
  return -2.0 / std::numbers::pi * v;
}

// L_1 - I_1 + 2/pi = (2/pi) int_0^{pi/2} sin t exp(-z sin t) dt.
double laplace_m1_shifted(double z) {
  const double split = std::min(std::numbers::pi / 2.0, 2.0 / z);
  auto f = [z](double t) { return std::sin(t) * std::exp(-z * std::sin(t)); };
  double v = detail::tanh_sinh(f, 0.0, split);
  if (split < std::numbers::pi / 2.0) v += detail::tanh_sinh(f, split, std::numbers::pi / 2.0);
  return 2.0 / std::numbers::pi * v;
}

long double series_difference(int nu, double z) {
  long double l = 0.0L;
  detail::struve_l_series(nu, z, 1e-21, 10000, l);
  return l - detail::bessel_i_series(nu, z);
}

void check_argument(double z, const char* who) {
  if (!(z >= 0.0) || std::isinf(z)) throw DomainError(std::string(who) + ": z must be finite and >= 0");
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw InvalidArgument("SeriesControl: rel_tol must be positive");
  if (max_terms < 1) throw InvalidArgument("SeriesControl: max_terms must be >= 1");
}

ScaledValue struve_l(int order, double z, const SeriesControl& ctl) {
  if (order < -1 || order > 1)
    throw InvalidArgument("struve_l: order must be -1, 0 or 1, got " + std::to_string(order));
  check_argument(z, "struve_l");
  ctl.validate();
  long double sum = 0.0L;
  if (!detail::struve_l_series(order, z, ctl.rel_tol, ctl.max_terms, sum))
    throw ConvergenceError("struve_l: series did not converge within max_terms at z = " + std::to_string(z));
  ScaledValue out;
  detail::split_long_double(sum, out.mantissa, out.exp_shift);
  return out.normalized();
}

double struve_minus_bessel(int order, double z) {
  check_struve_order(order);
  check_argument(z, "struve_minus_bessel");
  if (z <= kSeriesDifferenceMax) return static_cast<double>(series_difference(order, z));
  if (z < struve_switch) return order == 0 ? laplace_m0(z) : laplace_m1_shifted(z) - 2.0 / std::numbers::pi;
  return asymptotic_sum(order, z, 0);
}

double struve_minus_bessel_shifted(double z) {
  check_argument(z, "struve_minus_bessel_shifted");
  if (z <= kSeriesDifferenceMax)
    return static_cast<double>(series_difference(1, z) + 2.0L / std::numbers::pi_v<long double>);
  if (z < struve_switch) return laplace_m1_shifted(z);
  return asymptotic_sum(1, z, 1);
}

double struve_tail_asymptotic(int order, double z) {
  check_struve_order(order);
  if (!(z > 0.0) || std::isinf(z)) throw DomainError("struve_tail_asymptotic: z must be finite and > 0");
  return asymptotic_sum(order, z, 0);
}

}  // namespace specfun
}  // namespace geab
