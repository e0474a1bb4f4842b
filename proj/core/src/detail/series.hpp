#pragma once

// Power series shared by several specfun translation units, in extended
// precision so that differences of nearly equal sums keep their digits.
namespace geab::detail {

/// I_n(z) = sum_k (z/2)^{2k+n} / (k! (k+n)!), n in {0, 1}.
long double bessel_i_series(int n, double z);

/// L_nu(z) = sum_k (z/2)^{2k+nu+1} / (Gamma(k+3/2) Gamma(k+nu+3/2)), nu in {-1, 0, 1}.
/// Returns false if max_terms is exhausted before rel_tol is met.
bool struve_l_series(int nu, double z, double rel_tol, int max_terms, long double& out);

}  // namespace geab::detail
