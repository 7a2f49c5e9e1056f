#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Dense square matrix, row-major.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DenseMatrix adjacency(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double frobenius_norm() const noexcept;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Real eigenvalues sorted descending.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the values descending.
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double max() const noexcept { return values_.front(); }
  double min() const noexcept { return values_.back(); }
  std::span<const double> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  std::vector<double> values_;
};

/// Spectrum plus orthonormal eigenvectors; column j of `vectors` pairs with spectrum[j].
struct EigenPairs {
  Spectrum spectrum;
  DenseMatrix vectors{0};

  std::vector<double> vector(std::size_t j) const;
};

/// Jacobi stops once the off-diagonal Frobenius norm is at most this times ||A||_F.
inline constexpr double kJacobiRelativeThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 50;

inline double default_zero_tol(std::size_t order) { return 1e-9 * static_cast<double>(order); }

Spectrum eigen_sym(const Graph& g);
EigenPairs eigen_sym_full(const Graph& g);

/// Cyclic Jacobi on an arbitrary real symmetric matrix (only the upper
/// triangle is read). Throws non_convergence past kJacobiMaxSweeps.
EigenPairs eigen_sym_matrix(const DenseMatrix& a);
/// Same solver without eigenvector accumulation.
Spectrum eigenvalues_sym(const DenseMatrix& a);

/// Number of eigenvalues with |lambda| <= zero_tol.
std::size_t nullity(const Spectrum& s, double zero_tol);

}  // namespace specgraph
