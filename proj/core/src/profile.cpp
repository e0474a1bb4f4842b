#include "geab/profile.hpp"

#include <cmath>
#include <string>

#include "geab/electric.hpp"
#include "geab/errors.hpp"
#include "geab/magnetic.hpp"

namespace geab {

namespace {

constexpr double kExactPhiMaxZeta = 700.0;

[[noreturn]] void unsupported(Quantity q, Method m) {
  throw InvalidMethod("method '" + std::string(to_string(m)) + "' is not available for " +
                      std::string(to_string(q)));
}

}  // namespace

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::b_z: return "b_z";
    case Quantity::a_phi: return "a_phi";
    case Quantity::e_r: return "e_r";
    case Quantity::phi: return "phi";
  }
  return "b_z";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::auto_select: return "auto";
    case Method::exact: return "exact";
    case Method::large_ratio: return "large_ratio";
    case Method::asymptotic: return "asymptotic";
    case Method::expansion: return "expansion";
  }
  return "auto";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::b_z, Quantity::a_phi, Quantity::e_r, Quantity::phi})
    if (name == to_string(q)) return q;
  throw InvalidArgument("unknown quantity '" + std::string(name) + "' (expected b_z, a_phi, e_r or phi)");
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::auto_select, Method::exact, Method::large_ratio, Method::asymptotic, Method::expansion})
    if (name == to_string(m)) return m;
  throw InvalidArgument("unknown method '" + std::string(name) +
                        "' (expected auto, exact, large_ratio, asymptotic or expansion)");
}

std::vector<double> linspace(double s_min, double s_max, std::size_t count) {
  if (count == 0) throw InvalidArgument("S range: sample count must be >= 1");
  if (!std::isfinite(s_min) || !std::isfinite(s_max)) throw InvalidArgument("S range: bounds must be finite");
  if (s_min < 0.0) throw InvalidArgument("S range: s_min must be >= 0");
  if (s_max < s_min) throw InvalidArgument("S range: s_max must be >= s_min");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = count == 1 ? s_min : s_min + (s_max - s_min) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

ProfileSample sample_point(Quantity quantity, PodolskyScale scale, double S, Method method) {
  const RadialPoint p = RadialPoint::at(S);
  ProfileSample out{S, 0.0, p.region, std::string(to_string(method))};
  const bool exact_like = method == Method::auto_select || method == Method::exact;
  switch (quantity) {
    case Quantity::b_z:
    case Quantity::a_phi: {
      const bool bz = quantity == Quantity::b_z;
      if (exact_like) {
        out.value = bz ? magnetic::b_z(p, scale) : magnetic::a_phi(p, scale);
        out.branch = "exact";
      } else if (method == Method::asymptotic) {
        const Approximation approx = bz ? magnetic::b_z_approx(p, scale) : magnetic::a_phi_approx(p, scale);
        out.value = approx.value;
        if (!approx.within_validity) out.branch = "asymptotic_invalid";
      } else {
        unsupported(quantity, method);
      }
      return out;
    }
    case Quantity::e_r: {
      switch (method) {
        case Method::auto_select:
        case Method::exact:
          out.value = electric::e_r(p, scale, electric::FieldMethod::exact);
          out.branch = "exact";
          return out;
        case Method::large_ratio:
          out.value = electric::e_r(p, scale, electric::FieldMethod::large_ratio);
          return out;
        case Method::asymptotic:
          out.value = electric::e_r(p, scale, electric::FieldMethod::asymptotic);
          return out;
        case Method::expansion:
          break;
      }
      unsupported(quantity, method);
    }
    case Quantity::phi: {
      // The continuous gauge needs the interior form at the wall, zeta = 1/A.
      const bool exact_available = scale.surface_zeta() <= kExactPhiMaxZeta;
      if (method == Method::exact || (method == Method::auto_select && exact_available)) {
        const electric::Gauge gauge = electric::continuous_exterior_gauge(scale);
        out.value = electric::phi(p, scale, gauge);
        out.branch = "exact";
      } else if (method == Method::asymptotic || method == Method::auto_select) {
        out.value = electric::phi_asymptotic(p, scale);
        out.branch = "asymptotic";
      } else if (method == Method::expansion) {
        const Approximation approx = electric::phi_interior_expansion(p, scale);
        out.value = approx.value;
        if (!approx.within_validity) out.branch = "expansion_invalid";
      } else {
        unsupported(quantity, method);
      }
      return out;
    }
  }
  unsupported(quantity, method);
}

FieldProfile sample_profile(Quantity quantity, PodolskyScale scale, const std::vector<double>& S, Method method) {
  FieldProfile out{quantity, scale.A(), {}};
  out.samples.reserve(S.size());
  for (double s : S) out.samples.push_back(sample_point(quantity, scale, s, method));
  return out;
}

}  // namespace geab
