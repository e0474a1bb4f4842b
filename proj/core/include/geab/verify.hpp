#pragma once

#include <string>
#include <vector>

namespace geab::verify {

enum class Level { fast, full };

/// One verification check. passed is observed <= tolerance; observed is an
/// error measure (deviation, jump, count of violations, ...).
struct Check {
  std::string module;
  std::string name;
  double observed = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  Level level = Level::fast;
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Runs the invariant suites of every module. Deterministic: same checks,
/// same order, same values on every call.
Report run_verification(Level level);

}  // namespace geab::verify
