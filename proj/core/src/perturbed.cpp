#include <algorithm>
#include <cmath>
#include <string>

#include "specgraph/error.hpp"
#include "specgraph/indices.hpp"
#include "specgraph/multipartite.hpp"

namespace specgraph {
namespace {

void require_order(std::size_t m) {
  if (m < 2) throw Error(Errc::invalid_order, "K_{m,m} perturbations need m >= 2, got " + std::to_string(m));
}

// Roots of lambda^3 - lambda^2 - m^2 lambda + m(m - 2), descending, each
// Newton-polished in long double.
std::array<long double, 3> plus_edge_cubic(std::size_t m) {
  const auto mm = static_cast<long double>(m);
  auto f = [mm](long double x) { return ((x - 1.0L) * x - mm * mm) * x + mm * (mm - 2.0L); };
  auto df = [mm](long double x) { return (3.0L * x - 2.0L) * x - mm * mm; };

  // Shift lambda = t + 1/3 to the depressed form t^3 + r t + s.
  const double r = static_cast<double>(-mm * mm - 1.0L / 3.0L);
  const double s = static_cast<double>(-2.0L / 27.0L - mm * mm / 3.0L + mm * (mm - 2.0L));
  const auto t = depressed_cubic_roots(r, s);
  if (t.size() != 3) throw Error(Errc::internal_defect, "K_{m,m}^{+e} cubic lost real roots");

  std::array<long double, 3> roots{};
  for (std::size_t i = 0; i < 3; ++i) {
    long double x = static_cast<long double>(t[i]) + 1.0L / 3.0L;
    for (int it = 0; it < 4; ++it) {
      const long double d = df(x);
      if (d == 0.0L) break;
      x -= f(x) / d;
    }
    roots[i] = x;
  }
  if (m == 2) roots[1] = 0.0L;  // the cubic factors as lambda (lambda^2 - lambda - 4)
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace

AnalyticSpectrum kmm_minus_e_spectrum(std::size_t m) {
  require_order(m);
  const auto mm = static_cast<double>(m);
  const double root = std::sqrt(mm * mm + 2.0 * mm - 3.0);
  const double small = (2.0 * mm - 2.0) / (root + mm - 1.0);  // (1 - m + root) / 2
  const double large = (mm - 1.0 + root) / 2.0;
  std::vector<SpectrumEntry> entries = {
      {large, 1, Provenance::closed_form, {}},
      {small, 1, Provenance::closed_form, {}},
      {-small, 1, Provenance::closed_form, {}},
      {-large, 1, Provenance::closed_form, {}},
  };
  if (m > 2) entries.push_back({0.0, 2 * m - 4, Provenance::zero_block, {}});
  return AnalyticSpectrum(std::move(entries));
}

MinusEdgeReport kmm_minus_e_report(std::size_t m) {
  MinusEdgeReport rep;
  rep.m = m;
  rep.spectrum = kmm_minus_e_spectrum(m);
  const auto mm = static_cast<double>(m);
  const double root = std::sqrt(mm * mm + 2.0 * mm - 3.0);
  rep.gap = (4.0 * mm - 4.0) / (root + mm - 1.0);
  rep.lower_bound = 2.0 * std::sqrt(1.0 - 2.0 / (mm + 1.0));
  rep.upper_bound = 2.0 * std::sqrt(1.0 - 1.0 / mm);
  rep.sandwich_holds = rep.lower_bound < rep.gap && rep.gap < rep.upper_bound;
  rep.limit_residual = std::abs(rep.gap - 2.0);
  return rep;
}

AnalyticSpectrum kmm_plus_e_spectrum(std::size_t m) {
  require_order(m);
  const auto roots = plus_edge_cubic(m);
  std::vector<SpectrumEntry> entries;
  std::size_t zeros = 2 * m - 4;
  for (long double x : roots) {
    if (x == 0.0L) {
      ++zeros;
    } else {
      entries.push_back({static_cast<double>(x), 1, Provenance::closed_form, {}});
    }
  }
  entries.push_back({-1.0, 1, Provenance::closed_form, {}});
  if (zeros > 0) entries.push_back({0.0, zeros, Provenance::zero_block, {}});
  return AnalyticSpectrum(std::move(entries));
}

PlusEdgeReport kmm_plus_e_report(std::size_t m) {
  PlusEdgeReport rep;
  rep.m = m;
  rep.spectrum = kmm_plus_e_spectrum(m);
  const auto roots = plus_edge_cubic(m);
  for (std::size_t i = 0; i < 3; ++i) rep.cubic_roots[i] = static_cast<double>(roots[i]);

  const SpectralIndices idx = compute_indices(rep.spectrum.expand(), default_zero_tol(2 * m));
  rep.lambda_minus = idx.lambda_minus;
  rep.lambda_plus = idx.lambda_plus;
  rep.gap = idx.gap;
  rep.ind = idx.ind;
  rep.ordering_holds = m >= 3 && roots[2] < -1.0L && roots[1] > 0.0L && roots[1] < roots[0] &&
                       std::abs(idx.lambda_plus - rep.cubic_roots[1]) == 0.0;
  if (m >= 4 && m <= kExpansionMaxOrder) {
    const auto mm = static_cast<long double>(m);
    const long double approx = 1.0L - 2.0L / mm - 2.0L / (mm * mm * mm);
    rep.expansion_residual = static_cast<double>(std::abs(roots[1] - approx));
    rep.expansion_bound = static_cast<double>(10.0L / (mm * mm * mm * mm));
    rep.expansion_holds = *rep.expansion_residual <= *rep.expansion_bound;
  }
  rep.gap_limit_residual = std::abs(rep.gap - 2.0);
  rep.ind_limit_residual = std::abs(rep.ind - 1.0);
  return rep;
}

}  // namespace specgraph
