#include "geab/scaled_value.hpp"

#include <algorithm>
#include <cmath>

#include "geab/errors.hpp"

namespace geab {

ScaledValue ScaledValue::normalized() const {
  if (mantissa == 0.0) return {0.0, 0.0};
  const double a = std::abs(mantissa);
  if (a >= 1e-2 && a <= 1e2) return *this;
  const double k = std::floor(std::log(a));
  return {mantissa * std::exp(-k), exp_shift + k};
}

double ScaledValue::value() const {
  if (mantissa == 0.0) return 0.0;
  if (std::abs(exp_shift) < 700.0) return mantissa * std::exp(exp_shift);
  // split so a tiny mantissa can pull a huge shift back into range
  const double half = 0.5 * exp_shift;
  return (mantissa * std::exp(half)) * std::exp(exp_shift - half);
}

double ScaledValue::to_double() const {
  const double v = value();
  if (!std::isfinite(v)) throw OverflowError("ScaledValue: value exceeds the range of double");
  return v;
}

double ScaledValue::log_abs() const {
  if (mantissa == 0.0) return -HUGE_VAL;
  return std::log(std::abs(mantissa)) + exp_shift;
}

ScaledValue operator*(const ScaledValue& x, const ScaledValue& y) {
  return ScaledValue{x.mantissa * y.mantissa, x.exp_shift + y.exp_shift}.normalized();
}

ScaledValue operator/(const ScaledValue& x, const ScaledValue& y) {
  if (y.mantissa == 0.0) throw DomainError("ScaledValue: division by zero");
  return ScaledValue{x.mantissa / y.mantissa, x.exp_shift - y.exp_shift}.normalized();
}

ScaledValue operator*(const ScaledValue& x, double y) {
  return ScaledValue{x.mantissa * y, x.exp_shift}.normalized();
}

ScaledValue operator*(double x, const ScaledValue& y) { return y * x; }

ScaledValue operator+(const ScaledValue& x, const ScaledValue& y) {
  if (x.mantissa == 0.0) return y.normalized();
  if (y.mantissa == 0.0) return x.normalized();
  const double s = std::max(x.exp_shift, y.exp_shift);
  const double m = x.mantissa * std::exp(x.exp_shift - s) + y.mantissa * std::exp(y.exp_shift - s);
  return ScaledValue{m, m == 0.0 ? 0.0 : s}.normalized();
}

ScaledValue operator-(const ScaledValue& x) { return {-x.mantissa, x.exp_shift}; }

ScaledValue operator-(const ScaledValue& x, const ScaledValue& y) { return x + (-y); }

}  // namespace geab
