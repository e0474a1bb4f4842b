#pragma once

#include <cmath>
#include <numbers>

#include "geab/errors.hpp"

// Fixed-shape rules used inside specfun. Kept separate from the adaptive
// oracle quadrature so that oracle checks stay independent of these.
namespace geab::detail {

/// Tanh-sinh quadrature on [a, b]. Levels halve the step until two
/// successive estimates agree to rel_tol. f may be singular at the ends.
template <class F>
double tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-15, int max_level = 10) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double t_max = 3.2;
  const double width = b - a;
  auto contribution = [&](double t) {
    // Nodes written as distance from each end to keep full relative accuracy there.
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    const double d = width * e / (1.0 + e);
    const double ch = std::cosh(u);
    const double w = half_pi * std::cosh(t) / (ch * ch) * width / 2.0;
    if (d == 0.0) return 0.0;
    return w * (f(a + d) + f(b - d));
  };

  double h = 0.5;
  double sum = half_pi * width / 2.0 * f(a + width / 2.0);
  for (double t = h; t <= t_max; t += h) sum += contribution(t);
  double estimate = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2.0;
    for (double t = h; t <= t_max; t += 2.0 * h) sum += contribution(t);
    const double next = h * sum;
    if (level >= 3 && std::abs(next - estimate) <= rel_tol * std::abs(next)) return next;
    estimate = next;
  }
  return estimate;
}

/// Trapezoid rule for int_0^inf g(t) dt with g even and analytic, decaying
/// double-exponentially. Spectrally accurate; stops at t_max.
template <class G>
double even_trapezoid(G&& g, double h, double t_max) {
  double sum = 0.5 * g(0.0);
  const int n = static_cast<int>(std::ceil(t_max / h));
  for (int k = 1; k <= n; ++k) sum += g(k * h);
  return h * sum;
}

/// Converts a long double to ScaledValue-style (mantissa, shift) without
/// overflow in the conversion to double.
inline void split_long_double(long double x, double& mantissa, double& shift) {
  if (x == 0.0L) {
    mantissa = 0.0;
    shift = 0.0;
    return;
  }
  const long double k = std::floor(std::log(std::fabs(x)));
  mantissa = static_cast<double>(x / std::exp(k));
  shift = static_cast<double>(k);
}

}  // namespace geab::detail
