#pragma once

#include <array>

#include "geab/electric.hpp"
#include "geab/radial.hpp"

namespace geab::oracle {

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Vector2 = std::array<double, 2>;

/// Dense LU solve with partial pivoting. Throws SingularMatrixError when the
/// matrix is singular to working precision.
Vector2 solve_linear_2x2(const Matrix2& m, const Vector2& rhs);

/// b1 and b4 from the two matching conditions at zeta = 1/A (continuity of
/// E and dE/dzeta), solved numerically in exponentially rescaled unknowns.
electric::BoundaryCoefficients boundary_coeffs_by_linear_solve(PodolskyScale scale);

}  // namespace geab::oracle
