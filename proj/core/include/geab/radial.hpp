#pragma once

#include <string_view>

namespace geab {

/// Dimensionless Podolsky length A = a/R.
class PodolskyScale {
 public:
  /// Throws DomainError unless A is finite and positive.
  explicit PodolskyScale(double A);
  static PodolskyScale from_lengths(double a_metres, double R_metres);

  double A() const { return A_; }
  /// 1/A = R/a, the surface position in units of a.
  double surface_zeta() const { return 1.0 / A_; }
  /// zeta = r/a for a radius S = r/R.
  double zeta(double S) const { return S / A_; }
  /// The large-R/a approximations lose meaning for A >= 0.5.
  bool beyond_small_a() const { return A_ >= 0.5; }

 private:
  double A_;
};

enum class Region { inside, surface, outside };

std::string_view to_string(Region region);

/// A radius S = r/R tagged with its position relative to the device wall.
struct RadialPoint {
  double S = 0.0;
  Region region = Region::inside;

  /// Tags S by comparison with 1. Throws DomainError for negative or
  /// non-finite S.
  static RadialPoint at(double S);
};

/// Value of an approximate formula together with a flag that is false when
/// the arguments fall outside the approximation's stated range.
struct Approximation {
  double value = 0.0;
  bool within_validity = true;
};

}  // namespace geab
