#include <cmath>
#include <string>

#include "detail/quadrature_rules.hpp"
#include "geab/errors.hpp"
#include "geab/specfun.hpp"

namespace geab::specfun {

namespace {

bool is_nonpositive_integer(const Rational& r) {
  return r.num <= 0 && r.num % r.den == 0;
}

void check_rational(const Rational& r) {
  if (r.den == 0) throw InvalidArgument("hyp_pfq: rational with zero denominator");
}

}  // namespace

ScaledValue hyp_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b, double x,
                    const SeriesControl& ctl) {
  ctl.validate();
  if (a.size() > 2 || b.size() > 3)
    throw InvalidArgument("hyp_pfq: supports p <= 2 numerator and q <= 3 denominator parameters");
  if (!std::isfinite(x)) throw DomainError("hyp_pfq: x must be finite");
  for (const auto& r : a) check_rational(r);
  for (const auto& r : b) {
    check_rational(r);
    if (is_nonpositive_integer(r)) throw InvalidArgument("hyp_pfq: denominator parameter is a nonpositive integer");
  }
  bool terminating = false;
  for (const auto& r : a) terminating = terminating || is_nonpositive_integer(r);
  if (!terminating && a.size() == b.size() + 1 && std::abs(x) >= 1.0)
    throw DomainError("hyp_pfq: series diverges for |x| >= 1 when p = q + 1");

  // Rescaling keeps the long double sum in range for arguments where the
  // result itself exceeds the range of long double.
  constexpr long double kRescale = 1e4000L;
  const double kRescaleLog = 4000.0 * std::log(10.0);

  long double term = 1.0L;
  long double sum = 1.0L;
  long double carry = 0.0L;  // Kahan compensation
  double shift = 0.0;
  const long double lx = x;
  for (int k = 0;; ++k) {
    if (k + 1 >= ctl.max_terms)
      throw ConvergenceError("hyp_pfq: series did not converge within " + std::to_string(ctl.max_terms) + " terms");
    long double ratio = lx / (k + 1);
    for (const auto& r : a) ratio *= static_cast<long double>(r.num) / r.den + k;
    for (const auto& r : b) ratio /= static_cast<long double>(r.num) / r.den + k;
    term *= ratio;
    const long double y = term - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    if (term == 0.0L) break;
    if (std::fabs(sum) > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      carry /= kRescale;
      shift += kRescaleLog;
    }
    if (std::fabs(ratio) < 0.5L && std::fabs(term) <= ctl.rel_tol * std::fabs(sum)) break;
  }
  ScaledValue out;
  detail::split_long_double(sum, out.mantissa, out.exp_shift);
  out.exp_shift += shift;
  return out.normalized();
}

}  // namespace geab::specfun
