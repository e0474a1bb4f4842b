#include "geab/oracle/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "geab/errors.hpp"

namespace geab::oracle {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double lo, double hi, int& evaluations) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  evaluations += 15;
  kronrod *= h;
  gauss *= h;
  if (!std::isfinite(kronrod)) throw ConvergenceError("quadrature: integrand is not finite on the interval");
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi, double tol,
                            int max_intervals) {
  if (!(tol > 0.0)) throw InvalidArgument("quadrature: tol must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("quadrature: limits must be finite");
  QuadratureResult out;
  if (lo == hi) return out;

  std::vector<Segment> heap{gauss_kronrod(f, lo, hi, out.evaluations)};
  double value = heap.front().value;
  double error = heap.front().error;
  const double eps = std::numeric_limits<double>::epsilon();
  while (error > std::max(tol, 8.0 * eps * std::abs(value))) {
    if (static_cast<int>(heap.size()) >= max_intervals)
      throw ConvergenceError("quadrature: error estimate " + std::to_string(error) + " above tolerance after " +
                             std::to_string(max_intervals) + " intervals");
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    for (const Segment& half : {gauss_kronrod(f, worst.lo, mid, out.evaluations),
                                gauss_kronrod(f, mid, worst.hi, out.evaluations)}) {
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end());
    }
    // Re-sum rather than update incrementally so that the totals do not drift.
    value = 0.0;
    error = 0.0;
    for (const Segment& s : heap) {
      value += s.value;
      error += s.error;
    }
  }
  out.value = value;
  out.error_estimate = error;
  return out;
}

}  // namespace geab::oracle
