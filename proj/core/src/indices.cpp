#include "specgraph/indices.hpp"

#include <cmath>
#include <limits>

#include "specgraph/error.hpp"

namespace specgraph {

SpectralIndices compute_indices(const Spectrum& s, double zero_tol) {
  if (s.size() == 0) throw Error(Errc::degenerate_spectrum, "empty spectrum");
  double plus = std::numeric_limits<double>::infinity();
  double minus = -std::numeric_limits<double>::infinity();
  double pow = 0.0;
  for (double x : s) {
    pow += std::abs(x);
    if (x > zero_tol && x < plus) plus = x;
    if (x < -zero_tol && x > minus) minus = x;
  }
  if (std::isinf(plus) || std::isinf(minus)) {
    throw Error(Errc::degenerate_spectrum, "spectrum lacks a positive or a negative eigenvalue");
  }
  SpectralIndices out;
  out.lambda_max = s.max();
  out.lambda_min = s.min();
  out.lambda_plus = plus;
  out.lambda_minus = minus;
  out.gap = plus - minus;
  out.ind = std::max(std::abs(plus), std::abs(minus));
  out.pow = pow;
  return out;
}

double index_value(const SpectralIndices& s, IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::lambda_max: return s.lambda_max;
    case IndexKind::lambda_min: return s.lambda_min;
    case IndexKind::gap: return s.gap;
    case IndexKind::ind: return s.ind;
    case IndexKind::pow: return s.pow;
  }
  return 0.0;
}

std::string_view index_name(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::lambda_max: return "lambda_max";
    case IndexKind::lambda_min: return "lambda_min";
    case IndexKind::gap: return "gap";
    case IndexKind::ind: return "ind";
    case IndexKind::pow: return "pow";
  }
  return "";
}

std::optional<IndexKind> parse_index_name(std::string_view name) noexcept {
  if (name == "lambda_max" || name == "lmax") return IndexKind::lambda_max;
  if (name == "lambda_min" || name == "lmin") return IndexKind::lambda_min;
  if (name == "gap") return IndexKind::gap;
  if (name == "ind") return IndexKind::ind;
  if (name == "pow") return IndexKind::pow;
  return std::nullopt;
}

}  // namespace specgraph
