#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "specgraph/error.hpp"
#include "specgraph/indices.hpp"
#include "specgraph/multipartite.hpp"

using namespace specgraph;

namespace {

double max_dev(const Spectrum& a, const Spectrum& b) {
  EXPECT_EQ(a.size(), b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(Multipartite, Psi) {
  const Partition p({1, 2, 3});
  EXPECT_NEAR(psi(0.0, p), 3.0, 1e-15);
  EXPECT_NEAR(psi(1.0, p), 0.5 + 2.0 / 3.0 + 0.75, 1e-15);
  EXPECT_THROW(psi(-2.0, p), Error);
}

TEST(Multipartite, OneTwoThreeFrozen) {
  // Oracle: numpy eigvalsh of the 6 x 6 adjacency matrix.
  const Spectrum s = multipartite_spectrum(Partition({1, 2, 3})).expand();
  ASSERT_EQ(s.size(), 6u);
  EXPECT_NEAR(s[0], 3.766435483852705, 1e-10);
  EXPECT_NEAR(s[1], 0.0, 1e-12);
  EXPECT_NEAR(s[2], 0.0, 1e-12);
  EXPECT_NEAR(s[3], 0.0, 1e-12);
  EXPECT_NEAR(s[4], -1.2828238633087978, 1e-10);
  EXPECT_NEAR(s[5], -2.4836116205439054, 1e-10);
}

TEST(Multipartite, RepeatedSizes) {
  // K_{2,2,2}: 4, 0 x3, -2 x2.
  const AnalyticSpectrum a = multipartite_spectrum(Partition({2, 2, 2}));
  EXPECT_EQ(a.total(), 6u);
  const Spectrum s = a.expand();
  EXPECT_NEAR(s[0], 4.0, 1e-12);
  EXPECT_NEAR(s[4], -2.0, 1e-12);
  EXPECT_NEAR(s[5], -2.0, 1e-12);
  bool fixed = false;
  for (const auto& e : a.entries()) {
    if (e.provenance == Provenance::fixed_part_value) {
      EXPECT_EQ(e.multiplicity, 2u);
      EXPECT_EQ(e.value, -2.0);
      fixed = true;
    }
  }
  EXPECT_TRUE(fixed);
}

TEST(Multipartite, CompleteGraphIsAllOnes) {
  const Spectrum s = multipartite_spectrum(Partition({1, 1, 1, 1, 1})).expand();
  EXPECT_NEAR(s[0], 4.0, 1e-12);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_NEAR(s[i], -1.0, 1e-12);
}

TEST(Multipartite, AgreesWithEigenForAllSmallPartitions) {
  for (std::size_t m = 2; m <= 12; ++m) {
    for (const Partition& p : Partition::all_of(m)) {
      const AnalyticSpectrum a = multipartite_spectrum(p);
      EXPECT_EQ(a.total(), m);
      const Spectrum s = a.expand();
      EXPECT_LE(max_dev(s, eigen_sym(families::complete_multipartite(p))), 1e-8);
      std::size_t positive = 0;
      for (double v : s) positive += v > 1e-9;
      EXPECT_EQ(positive, 1u);
      const SpectralIndices x = compute_indices(s);
      EXPECT_NEAR(x.pow, 2.0 * x.lambda_max, 1e-9);
    }
  }
}

TEST(Multipartite, DispersionBracketsChangeSign) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> size(1, 30);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::size_t> parts(2 + t % 6);
    for (auto& x : parts) x = size(rng);
    const Partition p(parts);
    for (const auto& e : multipartite_spectrum(p).entries()) {
      if (e.provenance != Provenance::dispersion_root) continue;
      ASSERT_TRUE(e.bracket);
      const auto [lo, hi] = *e.bracket;
      EXPECT_LE(hi - lo, kRootWidth);
      EXPECT_LE(lo, e.value);
      EXPECT_GE(hi, e.value);
      if (hi > lo) {
        EXPECT_GT(psi(lo, p) - 1.0, 0.0);
        EXPECT_LE(psi(hi, p) - 1.0, 0.0);
      }
    }
  }
}

TEST(Multipartite, ReducedMatrixRoute) {
  const Spectrum r = reduced_matrix_spectrum(Partition({1, 2, 3}));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 3.766435483852705, 1e-10);
  EXPECT_NEAR(r[2], -2.4836116205439054, 1e-10);
}

TEST(Multipartite, LargeEquipartitionEndpoint) {
  // Positive root sits exactly at m - m/k.
  const Spectrum s = multipartite_spectrum(Partition({7, 7, 7})).expand();
  EXPECT_NEAR(s[0], 14.0, 1e-9);
}

TEST(Cubic, DepressedRootsSatisfyEquation) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int t = 0; t < 200; ++t) {
    const double r = u(rng), s = u(rng);
    const auto roots = depressed_cubic_roots(r, s);
    const double disc = -(4.0 * r * r * r + 27.0 * s * s);
    EXPECT_EQ(roots.size(), disc >= 0.0 ? 3u : 1u);
    for (double x : roots) EXPECT_NEAR(x * x * x + r * x + s, 0.0, 1e-8 * (1.0 + std::abs(x) * std::abs(x) * std::abs(x)));
    EXPECT_TRUE(std::is_sorted(roots.rbegin(), roots.rend()));
  }
}

TEST(Cubic, TripartiteMatchesEigen) {
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = a; b <= 5; ++b)
      for (std::size_t c = b; c <= 5; ++c) {
        const auto roots = tripartite_roots(a, b, c);
        const Spectrum s = eigen_sym(families::complete_multipartite(Partition({a, b, c})));
        EXPECT_NEAR(roots[0], s.max(), 1e-10);
        EXPECT_NEAR(roots[2], s.min(), 1e-10);
      }
  const auto r = tripartite_roots(1, 2, 3);
  EXPECT_NEAR(r[1], -1.2828238633087978, 1e-10);
}
