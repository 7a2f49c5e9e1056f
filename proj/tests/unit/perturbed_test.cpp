#include <gtest/gtest.h>

#include <cmath>

#include "specgraph/multipartite.hpp"

using namespace specgraph;

namespace {

double max_dev(const Spectrum& a, const Spectrum& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(MinusEdge, ThreeFrozen) {
  // 1 - m +- sqrt(m^2 + 2m - 3) over 2 at m = 3: +-(sqrt(3) - 1), +-(sqrt(3) + 1).
  const auto r = kmm_minus_e_report(3);
  const Spectrum s = r.spectrum.expand();
  EXPECT_NEAR(s[0], std::sqrt(3.0) + 1.0, 1e-12);
  EXPECT_NEAR(s[1], std::sqrt(3.0) - 1.0, 1e-12);
  EXPECT_NEAR(s[4], 1.0 - std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(r.gap, 2.0 * (std::sqrt(3.0) - 1.0), 1e-12);
  EXPECT_TRUE(r.sandwich_holds);
}

TEST(MinusEdge, AgreesWithEigenAndSandwich) {
  for (std::size_t m = 2; m <= 50; ++m) {
    const auto r = kmm_minus_e_report(m);
    EXPECT_LE(max_dev(r.spectrum.expand(), eigen_sym(families::kmm_minus_e(m))), 1e-8) << m;
    EXPECT_TRUE(r.sandwich_holds) << m;
    EXPECT_LT(r.lower_bound, r.gap);
    EXPECT_LT(r.gap, r.upper_bound);
  }
}

TEST(MinusEdge, Limit) {
  const auto r = kmm_minus_e_report(1000000);
  EXPECT_LE(std::abs(r.gap - 2.0), 1e-5);
  EXPECT_EQ(r.spectrum.total(), 2000000u);
}

TEST(PlusEdge, ThreeFrozen) {
  // Oracle: numpy roots of x^3 - x^2 - 9x + 3.
  const auto r = kmm_plus_e_report(3);
  EXPECT_NEAR(r.cubic_roots[0], 3.39234435, 1e-8);
  EXPECT_NEAR(r.cubic_roots[1], 0.32539677, 1e-8);
  EXPECT_NEAR(r.cubic_roots[2], -2.71774112, 1e-8);
  EXPECT_NEAR(r.lambda_minus, -1.0, 1e-12);
  EXPECT_TRUE(r.ordering_holds);
}

TEST(PlusEdge, AgreesWithEigen) {
  for (std::size_t m = 2; m <= 50; ++m) {
    const auto r = kmm_plus_e_report(m);
    EXPECT_LE(max_dev(r.spectrum.expand(), eigen_sym(families::kmm_plus_e(m))), 1e-8) << m;
    EXPECT_NEAR(r.lambda_minus, -1.0, 1e-9);
    if (m >= 3) EXPECT_TRUE(r.ordering_holds) << m;
  }
}

TEST(PlusEdge, OrderTwoFoldsZeroRoot) {
  const auto r = kmm_plus_e_report(2);
  EXPECT_NEAR(r.cubic_roots[1], 0.0, 0.0);
  EXPECT_FALSE(r.ordering_holds);
  EXPECT_NEAR(r.lambda_plus, (1.0 + std::sqrt(17.0)) / 2.0, 1e-12);
}

TEST(PlusEdge, ExpansionCoefficient) {
  for (std::size_t m : {4u, 10u, 100u, 1000u, 10000u}) {
    const auto r = kmm_plus_e_report(m);
    ASSERT_TRUE(r.expansion_residual);
    EXPECT_TRUE(r.expansion_holds) << m;
  }
  EXPECT_FALSE(kmm_plus_e_report(20000).expansion_residual);
}

TEST(PlusEdge, Limits) {
  const auto r = kmm_plus_e_report(1000000);
  EXPECT_LE(r.gap_limit_residual, 1e-5);
  EXPECT_LE(r.ind_limit_residual, 1e-5);
}
