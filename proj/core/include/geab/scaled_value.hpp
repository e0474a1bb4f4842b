#pragma once

namespace geab {

/// A real number stored as mantissa * e^{exp_shift}.
///
/// Closed forms in this library multiply factors such as e^{-R/a} and
/// I0(r/a) ~ e^{r/a}; each factor alone over- or underflows a double long
/// before the product does. ScaledValue keeps the exponent separate so the
/// exponents combine additively before any mantissa is touched.
///
/// After normalized(), a nonzero value has |mantissa| in [1e-2, 1e2].
struct ScaledValue {
  double mantissa = 0.0;
  double exp_shift = 0.0;

  static ScaledValue from_double(double x) { return ScaledValue{x, 0.0}.normalized(); }
  /// e^{x}, exactly representable for any finite x.
  static ScaledValue exp(double x) { return ScaledValue{1.0, x}; }

  ScaledValue normalized() const;

  /// mantissa * e^{exp_shift}; saturates to +-inf or 0 like std::exp.
  double value() const;
  /// As value(), but throws OverflowError if the result is not finite.
  double to_double() const;
  /// ln|value|; -inf for zero.
  double log_abs() const;
  int sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }
  bool is_zero() const { return mantissa == 0.0; }
};

ScaledValue operator*(const ScaledValue& x, const ScaledValue& y);
ScaledValue operator/(const ScaledValue& x, const ScaledValue& y);
ScaledValue operator*(const ScaledValue& x, double y);
ScaledValue operator*(double x, const ScaledValue& y);
ScaledValue operator+(const ScaledValue& x, const ScaledValue& y);
ScaledValue operator-(const ScaledValue& x, const ScaledValue& y);
ScaledValue operator-(const ScaledValue& x);

}  // namespace geab
