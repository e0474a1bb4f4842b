#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geab/radial.hpp"

// Sampled radial profiles of the normalized fields, as emitted by the CLI.
namespace geab {

enum class Quantity { b_z, a_phi, e_r, phi };

/// Evaluation route. auto_select picks the exact closed form where it is
/// representable and falls back to the asymptotic form otherwise.
enum class Method { auto_select, exact, large_ratio, asymptotic, expansion };

std::string_view to_string(Quantity q);
std::string_view to_string(Method m);
/// Throws InvalidArgument for unknown names.
Quantity parse_quantity(std::string_view name);
Method parse_method(std::string_view name);

struct ProfileSample {
  double S = 0.0;
  double value = 0.0;
  Region region = Region::inside;
  /// Route actually used for this sample: "exact", "asymptotic", ...
  /// An "_invalid" suffix marks approximations outside their stated range.
  std::string branch;
};

struct FieldProfile {
  Quantity quantity = Quantity::b_z;
  double A = 0.0;
  std::vector<ProfileSample> samples;
};

/// count points s_min + (s_max - s_min) i/(count-1). count == 1 yields s_min.
/// Throws InvalidArgument for count == 0, s_max < s_min or negative s_min.
std::vector<double> linspace(double s_min, double s_max, std::size_t count);

/// Throws InvalidMethod when the method does not exist for the quantity.
/// phi uses the gauge that is zero on the axis and continuous at the wall.
ProfileSample sample_point(Quantity quantity, PodolskyScale scale, double S, Method method);
FieldProfile sample_profile(Quantity quantity, PodolskyScale scale, const std::vector<double>& S,
                            Method method);

}  // namespace geab
