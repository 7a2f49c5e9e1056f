#include "specgraph/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "specgraph/eigen.hpp"
#include "specgraph/error.hpp"
#include "specgraph/multipartite.hpp"
#include "specgraph/structure.hpp"

namespace specgraph {

MultipartiteBoundsReport multipartite_bounds_check(const Partition& p) {
  MultipartiteBoundsReport rep;
  const AnalyticSpectrum analytic = multipartite_spectrum(p);
  const Spectrum s = analytic.expand();
  const auto m = static_cast<double>(p.order());
  const auto k = static_cast<double>(p.part_count());
  rep.m = p.order();
  rep.k = p.part_count();
  rep.indices = compute_indices(s, default_zero_tol(p.order()));

  const double top = m - m / k;
  const auto& x = rep.indices;
  rep.gap_ok = x.gap <= m + kBoundSlack;
  rep.ind_ok = x.ind <= m - 1.0 + kBoundSlack;
  rep.pow_ok = x.pow <= 2.0 * top + kBoundSlack;
  rep.lambda_plus_ok = x.lambda_plus > 0.0 && x.lambda_plus <= top + kBoundSlack;
  rep.lambda_minus_ok = x.lambda_minus < 0.0 && x.lambda_minus >= -m / k - kBoundSlack;
  rep.range_ok = s.min() >= -static_cast<double>(p.largest()) - kBoundSlack && s.max() <= top + kBoundSlack;
  const double tol = default_zero_tol(p.order());
  rep.one_positive = std::count_if(s.begin(), s.end(), [tol](double v) { return v > tol; }) == 1;
  rep.pow_is_twice_max = std::abs(x.pow - 2.0 * x.lambda_max) <= kBoundSlack;
  return rep;
}

NonMultipartiteBoundsReport nonmultipartite_bounds_check(const Graph& g) {
  if (detect_complete_multipartite(g)) {
    throw Error(Errc::not_applicable, "graph is complete multipartite");
  }
  if (g.order() < 2 || !is_connected(g)) throw Error(Errc::not_applicable, "graph must be connected");
  NonMultipartiteBoundsReport rep;
  const std::size_t m = g.order();
  const auto md = static_cast<double>(m);
  const Spectrum s = eigen_sym(g);
  rep.m = m;
  rep.indices = compute_indices(s, default_zero_tol(m));
  rep.lambda2 = s[1];
  if (m % 2 == 0) {
    rep.gap_bound = md - 1.0;
    rep.ind_bound = md / 2.0;
  } else {
    rep.gap_bound = md - 1.5;
    rep.ind_bound = std::sqrt(md * md - 1.0) / 2.0;
  }
  rep.second_bound = static_cast<double>(m / 2) - 1.0;
  rep.gap_ok = rep.indices.gap <= rep.gap_bound + kBoundSlack;
  rep.ind_ok = rep.indices.ind <= rep.ind_bound + kBoundSlack;
  rep.second_ok = rep.indices.lambda_plus > 0.0 &&
                  rep.indices.lambda_plus <= rep.lambda2 + kBoundSlack &&
                  rep.lambda2 <= rep.second_bound + kBoundSlack;
  return rep;
}

BipartiteBoundReport bipartite_gap_bound(const Graph& g) {
  const std::size_t m = g.order();
  if (m < 2 || !is_connected(g)) throw Error(Errc::not_applicable, "graph must be connected");
  if (!is_bipartite(g)) throw Error(Errc::not_applicable, "graph is not bipartite");
  if (detect_complete_multipartite(g)) throw Error(Errc::not_applicable, "graph is complete bipartite");

  BipartiteBoundReport rep;
  const Spectrum s = eigen_sym(g);
  const double tol = default_zero_tol(m);
  rep.m = m;
  rep.k = nullity(s, tol);
  if (m <= rep.k + 2) throw Error(Errc::not_applicable, "m - k - 2 must be positive");
  const auto md = static_cast<double>(m);
  rep.d = 2.0 * static_cast<double>(g.edge_count()) / md;
  rep.gap = compute_indices(s, tol).gap;
  rep.bound = 2.0 * std::sqrt(rep.d * (md - 2.0 * rep.d) / static_cast<double>(m - rep.k - 2));
  rep.holds = rep.gap <= rep.bound + kBoundSlack;
  return rep;
}

DensityWitness density_search(double delta, double gamma, std::uint64_t scan_cap) {
  if (!(delta >= 0.0 && delta < gamma && gamma < 1.0)) {
    throw Error(Errc::invalid_params, "density search needs 0 <= delta < gamma < 1");
  }
  const double lo = std::sqrt(delta);
  const double hi = std::sqrt(gamma);
  for (std::uint64_t m2 = 1; m2 <= scan_cap; ++m2) {
    const double root = std::sqrt(static_cast<double>(m2));
    auto q = static_cast<std::uint64_t>(root);
    while (q * q > m2) --q;
    while ((q + 1) * (q + 1) <= m2) ++q;
    const double frac = root - static_cast<double>(q);
    if (frac < lo || frac > hi) continue;

    DensityWitness w;
    w.m2 = static_cast<std::size_t>(m2);
    w.m1 = static_cast<std::size_t>(q * q);
    w.m = w.m1 + w.m2;
    w.fraction = frac;
    w.gap = 2.0 * std::sqrt(static_cast<double>(w.m1) * static_cast<double>(w.m2));
    // m - gap = (sqrt(m2) - sqrt(m1))^2 = frac^2; check both forms.
    const auto md = static_cast<double>(w.m);
    const double slack = 1e-12 * md;
    const double defect = frac * frac;
    w.verified = md - gamma <= w.gap + slack && w.gap <= md - delta + slack &&
                 defect >= delta - 1e-15 && defect <= gamma + 1e-15;
    return w;
  }
  throw Error(Errc::search_budget_exceeded, "no witness with m2 <= " + std::to_string(scan_cap));
}

VertexAdditionReport cone_lambda_max_bound(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) throw Error(Errc::invalid_params, "graph must be connected, m >= 2");
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  VertexAdditionReport rep;
  rep.extended = g.with_vertex(all);
  rep.attached_to = g.order();
  rep.old_value = eigen_sym(g).max();
  rep.new_value = eigen_sym(rep.extended).max();
  rep.bound = (rep.old_value + std::sqrt(rep.old_value * rep.old_value + 4.0)) / 2.0;
  rep.holds = rep.new_value >= rep.bound - kBoundSlack;
  return rep;
}

VertexAdditionReport pendant_lambda_min_bound(const Graph& g) {
  const std::size_t m = g.order();
  if (m < 2 || !is_connected(g)) throw Error(Errc::invalid_params, "graph must be connected, m >= 2");
  const EigenPairs pairs = eigen_sym_full(g);
  const std::vector<double> x = pairs.vector(m - 1);
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0.5)) throw Error(Errc::degenerate_eigenvector, "lambda_min eigenvector vanished");

  // Lowest index among the entries of maximal magnitude (up to rounding).
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v) / norm);
  std::size_t i0 = 0;
  while (std::abs(x[i0]) / norm < best - 1e-12) ++i0;

  VertexAdditionReport rep;
  const std::array<std::size_t, 1> nb = {i0};
  rep.extended = g.with_vertex(nb);
  rep.attached_to = i0;
  rep.old_value = pairs.spectrum.min();
  rep.new_value = eigen_sym(rep.extended).min();
  const double md = static_cast<double>(m);
  rep.bound = (rep.old_value - std::sqrt(rep.old_value * rep.old_value + 4.0 / md)) / 2.0;
  rep.holds = rep.new_value <= rep.bound + kBoundSlack;
  return rep;
}

double approx_count(std::size_t m) {
  constexpr double omega0 = 261080.0;
  constexpr double omega1 = 1.4;
  constexpr double omega2 = 0.09;
  const double t = static_cast<double>(m) - 9.0;
  return omega0 * std::pow(10.0, omega1 * t + omega2 * t * t);
}

std::optional<std::uint64_t> known_connected_count(std::size_t m) noexcept {
  static constexpr std::array<std::uint64_t, 10> counts = {1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};
  if (m < 1 || m > counts.size()) return std::nullopt;
  return counts[m - 1];
}

}  // namespace specgraph
