#pragma once

#include <vector>

#include "geab/scaled_value.hpp"

namespace geab::specfun {

/// Scaling applied to modified Bessel function I: none, or multiplied by e^{-z}.
enum class IScaling { none, times_exp_minus_z };
/// Scaling applied to modified Bessel function K: none, or multiplied by e^{+z}.
enum class KScaling { none, times_exp_plus_z };

struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 10000;

  /// Throws InvalidArgument for a non-positive tolerance or term budget.
  void validate() const;
};

/// Above this argument the Struve-minus-Bessel differences use the
/// asymptotic series; below it the cancellation-free integral or the
/// power series.
inline constexpr double struve_switch = 30.0;

/// Modified Bessel I_order(z), order in {0, 1}, z >= 0.
/// With IScaling::none the returned ScaledValue carries e^{z} in its shift,
/// so arbitrarily large z does not overflow.
ScaledValue bessel_i(int order, double z, IScaling scaling = IScaling::none);

/// Modified Bessel K_order(z), order in {0, 1}, z > 0.
ScaledValue bessel_k(int order, double z, KScaling scaling = KScaling::none);

/// Modified Struve L_order(z), order in {-1, 0, 1}, z >= 0, from the power
/// series. Large z is costly; prefer struve_minus_bessel there.
ScaledValue struve_l(int order, double z, const SeriesControl& ctl = {});

/// M_order(z) = L_order(z) - I_order(z), order in {0, 1}, z >= 0.
/// Bounded: M_0 in [-1, 0), M_1 in (-2/pi, 0].
double struve_minus_bessel(int order, double z);

/// M_1(z) + 2/pi, computed without the cancellation of the direct sum.
double struve_minus_bessel_shifted(double z);

/// Optimally truncated asymptotic series S_nu(z) for L_nu - I_nu at large z.
/// For nu = 1 the returned value includes the -2/pi constant.
double struve_tail_asymptotic(int order, double z);

struct Rational {
  long num = 0;
  long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Generalized hypergeometric pFq(a; b; x) by direct summation. The
/// ScaledValue result absorbs the growth of the series for large x.
/// Throws DomainError if some b is zero or a negative integer, and
/// ConvergenceError if the series does not settle within ctl.max_terms.
ScaledValue hyp_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b, double x,
                    const SeriesControl& ctl = {});

/// int_0^z I_0(t) dt = z 1F2(1/2; 1, 3/2; z^2/4).
ScaledValue bessel_i0_integral(double z);

/// int_0^z K_0(t) dt = (pi/2) z [K_0 L_{-1} + K_1 L_0](z). Usable for
/// moderate z only; the bracket cancels badly once z exceeds ~20.
double bessel_k0_integral(double z);

/// int_z^inf K_0(t) dt, z > 0. Stable for all z.
ScaledValue bessel_k0_tail_integral(double z);

/// int_0^z (L_0(t) - I_0(t)) dt, z >= 0. Grows like -(2/pi) ln z.
double struve_minus_bessel_integral(double z);

}  // namespace geab::specfun
