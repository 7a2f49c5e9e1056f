#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "specgraph/eigen.hpp"

using namespace specgraph;

namespace {

// Independent oracle: Eigen's tridiagonal QR.
std::vector<double> oracle(const DenseMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(v.rbegin(), v.rend());
  return v;
}

Graph random_graph(std::size_t m, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(m);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (coin(rng)) g = g.with_edge(i, j);
  return g;
}

}  // namespace

TEST(Eigen, CompleteGraph) {
  const Spectrum s = eigen_sym(families::complete(6));
  EXPECT_NEAR(s.max(), 5.0, 1e-12);
  for (std::size_t i = 1; i < 6; ++i) EXPECT_NEAR(s[i], -1.0, 1e-12);
}

TEST(Eigen, PathAndCycleClosedForms) {
  for (std::size_t m = 2; m <= 15; ++m) {
    const Spectrum s = eigen_sym(families::path(m));
    for (std::size_t j = 1; j <= m; ++j)
      EXPECT_NEAR(s[j - 1], 2.0 * std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(m + 1)), 1e-12);
  }
  for (std::size_t m = 3; m <= 15; ++m) {
    std::vector<double> expect;
    for (std::size_t j = 0; j < m; ++j) expect.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m)));
    std::sort(expect.rbegin(), expect.rend());
    const Spectrum s = eigen_sym(families::cycle(m));
    for (std::size_t j = 0; j < m; ++j) EXPECT_NEAR(s[j], expect[j], 1e-12);
  }
}

TEST(Eigen, SingleVertex) {
  const Spectrum s = eigen_sym(Graph(1));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], 0.0);
}

TEST(Eigen, AgreesWithOracleOnRandomGraphs) {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + t % 20;
    const Graph g = random_graph(m, 0.2 + 0.6 * (t % 5) / 4.0, rng);
    const Spectrum s = eigen_sym(g);
    const auto ref = oracle(DenseMatrix::adjacency(g));
    for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(s[i], ref[i], 1e-10);
  }
}

TEST(Eigen, AgreesWithOracleOnDenseSymmetric) {
  std::mt19937 rng(5);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 25;
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = nd(rng);
    const Spectrum s = eigenvalues_sym(a);
    const auto ref = oracle(a);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(s[i], ref[i], 1e-10 * (1.0 + a.frobenius_norm()));
  }
}

TEST(Eigen, TraceAndSquareSumInvariants) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(2 + t % 14, 0.5, rng);
    const Spectrum s = eigen_sym(g);
    double sum = 0.0, sq = 0.0;
    for (double v : s) {
      sum += v;
      sq += v * v;
    }
    EXPECT_NEAR(sum, 0.0, 1e-10);
    EXPECT_NEAR(sq, 2.0 * static_cast<double>(g.edge_count()), 1e-9);
  }
}

TEST(Eigen, PermutationInvariance) {
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 3 + t % 10;
    const Graph g = random_graph(m, 0.5, rng);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Spectrum a = eigen_sym(g);
    const Spectrum b = eigen_sym(g.permuted(perm));
    for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(a[i], b[i], 1e-11);
  }
}

TEST(Eigen, EigenvectorsAreOrthonormalAndSatisfyEquation) {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 2 + t % 12;
    const Graph g = random_graph(m, 0.5, rng);
    const DenseMatrix a = DenseMatrix::adjacency(g);
    const EigenPairs ep = eigen_sym_full(g);
    for (std::size_t j = 0; j < m; ++j) {
      const auto x = ep.vector(j);
      for (std::size_t i = 0; i < m; ++i) {
        double ax = 0.0;
        for (std::size_t k = 0; k < m; ++k) ax += a(i, k) * x[k];
        EXPECT_NEAR(ax, ep.spectrum[j] * x[i], 1e-10);
      }
      for (std::size_t k = 0; k < m; ++k) {
        const auto y = ep.vector(k);
        const double dot = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        EXPECT_NEAR(dot, j == k ? 1.0 : 0.0, 1e-10);
      }
    }
  }
}

TEST(Eigen, Nullity) {
  EXPECT_EQ(nullity(eigen_sym(families::star(6)), default_zero_tol(6)), 4u);
  EXPECT_EQ(nullity(eigen_sym(families::complete(5)), default_zero_tol(5)), 0u);
  EXPECT_EQ(nullity(eigen_sym(families::path(5)), default_zero_tol(5)), 1u);
}

TEST(Eigen, SpectrumSortsDescending) {
  const Spectrum s({1.0, -3.0, 2.0});
  EXPECT_EQ(s[0], 2.0);
  EXPECT_EQ(s.min(), -3.0);
}
