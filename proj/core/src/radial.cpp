#include "geab/radial.hpp"

#include <cmath>
#include <string>

#include "geab/errors.hpp"

namespace geab {

PodolskyScale::PodolskyScale(double A) : A_(A) {
  if (!std::isfinite(A) || A <= 0.0)
    throw DomainError("PodolskyScale: A must be finite and positive, got " + std::to_string(A));
}

PodolskyScale PodolskyScale::from_lengths(double a_metres, double R_metres) {
  if (!std::isfinite(R_metres) || R_metres <= 0.0) throw DomainError("PodolskyScale: R must be positive");
  if (!std::isfinite(a_metres) || a_metres <= 0.0) throw DomainError("PodolskyScale: a must be positive");
  return PodolskyScale(a_metres / R_metres);
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::inside: return "inside";
    case Region::surface: return "surface";
    case Region::outside: return "outside";
  }
  return "inside";
}

RadialPoint RadialPoint::at(double S) {
  if (!std::isfinite(S) || S < 0.0) throw DomainError("RadialPoint: S must be finite and >= 0");
  if (S < 1.0) return {S, Region::inside};
  if (S > 1.0) return {S, Region::outside};
  return {S, Region::surface};
}

}  // namespace geab
