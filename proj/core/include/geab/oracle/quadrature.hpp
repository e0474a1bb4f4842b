#pragma once

#include <functional>

namespace geab::oracle {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature of f on [lo, hi] to an absolute
/// tolerance. Throws ConvergenceError if subdivision exhausts max_intervals
/// before the summed error estimate drops below tol.
QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            double tol, int max_intervals = 2000);

}  // namespace geab::oracle
