#pragma once

#include <numbers>

// SI constants. mu0 is taken as exactly 4 pi 1e-7 and eps0 derived from it,
// so the pair stays consistent with c.
namespace geab::si {

inline constexpr double c = 299792458.0;
inline constexpr double mu0 = 4.0e-7 * std::numbers::pi;
inline constexpr double eps0 = 1.0 / (mu0 * c * c);
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double elementary_charge = 1.602176634e-19;

/// Default Podolsky length used when SI examples do not override it.
inline constexpr double default_podolsky_length = 1.0e-18;

}  // namespace geab::si
