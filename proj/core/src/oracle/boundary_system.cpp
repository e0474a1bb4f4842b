#include "geab/oracle/boundary_system.hpp"

#include <numbers>

#include <Eigen/Dense>

#include "geab/errors.hpp"
#include "geab/specfun.hpp"

namespace geab::oracle {

Vector2 solve_linear_2x2(const Matrix2& m, const Vector2& rhs) {
  Eigen::Matrix2d a;
  a << m[0][0], m[0][1], m[1][0], m[1][1];
  const Eigen::FullPivLU<Eigen::Matrix2d> lu(a);
  if (!lu.isInvertible()) throw SingularMatrixError("solve_linear_2x2: matrix is singular");
  const Eigen::Vector2d x = lu.solve(Eigen::Vector2d(rhs[0], rhs[1]));
  return {x[0], x[1]};
}

electric::BoundaryCoefficients boundary_coeffs_by_linear_solve(PodolskyScale scale) {
  using specfun::IScaling;
  using specfun::KScaling;
  const double z0 = scale.surface_zeta();
  const double i0 = specfun::bessel_i(0, z0, IScaling::times_exp_minus_z).value();
  const double i1 = specfun::bessel_i(1, z0, IScaling::times_exp_minus_z).value();
  const double k0 = specfun::bessel_k(0, z0, KScaling::times_exp_plus_z).value();
  const double k1 = specfun::bessel_k(1, z0, KScaling::times_exp_plus_z).value();
  const double particular = -std::numbers::pi / 2.0 * z0;
  // Unknowns u = b1 e^{z0}, v = b4 e^{-z0}.
  //   E continuous:  b1 I0 - b4 K0 = particular (L0 - I0)
  //   E' continuous: b1 I1 + b4 K1 = particular (L1 - I1 + 2/pi)
  const Matrix2 m{{{i0, -k0}, {i1, k1}}};
  const Vector2 rhs{particular * specfun::struve_minus_bessel(0, z0),
                    particular * specfun::struve_minus_bessel_shifted(z0)};
  const Vector2 uv = solve_linear_2x2(m, rhs);
  return {ScaledValue{uv[0], -z0}.normalized(), ScaledValue{uv[1], z0}.normalized()};
}

}  // namespace geab::oracle
