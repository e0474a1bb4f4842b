#include <gtest/gtest.h>

#include <set>
#include <string>

#include "geab/verify.hpp"

using geab::verify::Level;

TEST(Verify, FastSuitePasses) {
  const auto r = geab::verify::run_verification(Level::fast);
  EXPECT_GE(r.checks.size(), 25u);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.module << "/" << c.name << " " << c.observed;
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.failures(), 0u);
  std::set<std::string> modules;
  for (const auto& c : r.checks) modules.insert(c.module);
  EXPECT_EQ(modules, (std::set<std::string>{"specfun", "magnetic", "electric", "oracle"}));
}

TEST(Verify, FullSuiteAddsSolverStudies) {
  const auto fast = geab::verify::run_verification(Level::fast);
  const auto full = geab::verify::run_verification(Level::full);
  EXPECT_GT(full.checks.size(), fast.checks.size());
  for (const auto& c : full.checks) EXPECT_TRUE(c.passed) << c.module << "/" << c.name << " " << c.observed;
}

TEST(Verify, Deterministic) {
  const auto a = geab::verify::run_verification(Level::fast);
  const auto b = geab::verify::run_verification(Level::fast);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].observed, b.checks[i].observed);
  }
}

TEST(Verify, FailureCounting) {
  geab::verify::Report r;
  r.checks.push_back({"m", "a", 1.0, 2.0, true});
  r.checks.push_back({"m", "b", 3.0, 2.0, false});
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.failures(), 1u);
}
