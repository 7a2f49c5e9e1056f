#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "specgraph/eigen.hpp"

namespace specgraph {

/// Spectral indices of one graph. lambda_plus / lambda_minus are the least
/// positive and greatest negative eigenvalues beyond the zero tolerance.
struct SpectralIndices {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double gap = 0.0;  // lambda_plus - lambda_minus
  double ind = 0.0;  // max(|lambda_plus|, |lambda_minus|)
  double pow = 0.0;  // sum of |lambda_k|
};

/// Eigenvalues with |lambda| <= zero_tol are excluded from the lambda_plus /
/// lambda_minus selection but still contribute |lambda| to pow.
/// Throws degenerate_spectrum if no eigenvalue lies beyond +zero_tol or -zero_tol.
SpectralIndices compute_indices(const Spectrum& s, double zero_tol);
inline SpectralIndices compute_indices(const Spectrum& s) {
  return compute_indices(s, default_zero_tol(s.size()));
}

enum class IndexKind { lambda_max, lambda_min, gap, ind, pow };

inline constexpr std::array<IndexKind, 5> kAllIndices = {
    IndexKind::lambda_max, IndexKind::lambda_min, IndexKind::gap, IndexKind::ind, IndexKind::pow};

double index_value(const SpectralIndices& s, IndexKind kind) noexcept;
/// Canonical names: lambda_max, lambda_min, gap, ind, pow.
std::string_view index_name(IndexKind kind) noexcept;
/// Accepts the canonical names plus the short forms lmax / lmin.
std::optional<IndexKind> parse_index_name(std::string_view name) noexcept;

}  // namespace specgraph
