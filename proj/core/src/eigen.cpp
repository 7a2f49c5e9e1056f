#include "specgraph/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "specgraph/error.hpp"

namespace specgraph {

DenseMatrix DenseMatrix::adjacency(const Graph& g) {
  DenseMatrix a(g.order());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

double DenseMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::vector<double> EigenPairs::vector(std::size_t j) const {
  std::vector<double> v(vectors.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, j);
  return v;
}

namespace {

EigenPairs run_jacobi(const DenseMatrix& input, bool want_vectors) {
  const std::size_t n = input.size();
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      a(i, j) = input(i, j);
      a(j, i) = input(i, j);
    }
  }
  DenseMatrix v(want_vectors ? n : 0);
  if (want_vectors) {
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  }

  const double threshold = kJacobiRelativeThreshold * a.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw Error(Errc::non_convergence,
                  "Jacobi exceeded " + std::to_string(kJacobiMaxSweeps) + " sweeps (n=" +
                      std::to_string(n) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = arp - s * (arq + tau * arp);
          a(r, q) = arq + s * (arp - tau * arq);
          a(p, r) = a(r, p);
          a(q, r) = a(r, q);
        }
        if (!want_vectors) continue;
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  std::vector<double> values(n);
  DenseMatrix vectors(want_vectors ? n : 0);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = a(order[k], order[k]);
    if (!want_vectors) continue;
    for (std::size_t r = 0; r < n; ++r) vectors(r, k) = v(r, order[k]);
  }
  return EigenPairs{Spectrum(std::move(values)), std::move(vectors)};
}

}  // namespace

EigenPairs eigen_sym_matrix(const DenseMatrix& a) { return run_jacobi(a, true); }

Spectrum eigenvalues_sym(const DenseMatrix& a) { return run_jacobi(a, false).spectrum; }

EigenPairs eigen_sym_full(const Graph& g) { return run_jacobi(DenseMatrix::adjacency(g), true); }

Spectrum eigen_sym(const Graph& g) { return run_jacobi(DenseMatrix::adjacency(g), false).spectrum; }

std::size_t nullity(const Spectrum& s, double zero_tol) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [zero_tol](double x) { return std::abs(x) <= zero_tol; }));
}

}  // namespace specgraph
