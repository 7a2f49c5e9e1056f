#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "specgraph/graph.hpp"
#include "specgraph/indices.hpp"

namespace specgraph {

/// Slack used by every bound comparison.
inline constexpr double kBoundSlack = 1e-9;

/// Bounds that hold for every complete multipartite graph K_{m1..mk}.
struct MultipartiteBoundsReport {
  SpectralIndices indices;
  std::size_t m = 0;
  std::size_t k = 0;
  bool gap_ok = false;           // gap <= m
  bool ind_ok = false;           // ind <= m - 1
  bool pow_ok = false;           // pow <= 2(m - m/k)
  bool lambda_plus_ok = false;   // 0 < lambda_plus <= m - m/k
  bool lambda_minus_ok = false;  // -m/k <= lambda_minus < 0
  bool range_ok = false;         // spectrum within [-m_k, m - m/k]
  bool one_positive = false;     // exactly one eigenvalue > 0
  bool pow_is_twice_max = false; // pow == 2 lambda_1

  bool all() const noexcept {
    return gap_ok && ind_ok && pow_ok && lambda_plus_ok && lambda_minus_ok && range_ok &&
           one_positive && pow_is_twice_max;
  }
};
MultipartiteBoundsReport multipartite_bounds_check(const Partition& p);

/// Bounds for connected graphs that are not complete multipartite.
struct NonMultipartiteBoundsReport {
  SpectralIndices indices;
  std::size_t m = 0;
  double lambda2 = 0.0;
  double gap_bound = 0.0;     // m - 1 (even m), m - 3/2 (odd m)
  double ind_bound = 0.0;     // m/2 (even m), sqrt(m^2 - 1)/2 (odd m)
  double second_bound = 0.0;  // floor(m/2) - 1
  bool gap_ok = false;
  bool ind_ok = false;
  bool second_ok = false;  // 0 < lambda_plus <= lambda2 <= floor(m/2) - 1

  bool all() const noexcept { return gap_ok && ind_ok && second_ok; }
};
/// Throws not_applicable if g is complete multipartite.
NonMultipartiteBoundsReport nonmultipartite_bounds_check(const Graph& g);

struct BipartiteBoundReport {
  std::size_t m = 0;
  double d = 0.0;  // average degree
  std::size_t k = 0;  // nullity
  double gap = 0.0;
  double bound = 0.0;  // 2 sqrt(d (m - 2d) / (m - k - 2))
  bool holds = false;
};
/// Throws not_applicable unless g is connected, bipartite, not complete
/// bipartite and m - k - 2 > 0.
BipartiteBoundReport bipartite_gap_bound(const Graph& g);

struct DensityWitness {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t m = 0;
  double gap = 0.0;       // 2 sqrt(m1 m2)
  double fraction = 0.0;  // sqrt(m2) - floor(sqrt(m2))
  bool verified = false;  // m - gamma <= gap <= m - delta
};
inline constexpr std::uint64_t kDensityScanCap = 10'000'000;
/// Smallest m2 with sqrt(delta) <= frac(sqrt(m2)) <= sqrt(gamma), m1 = floor(sqrt(m2))^2.
/// Throws invalid_params unless 0 <= delta < gamma < 1, search_budget_exceeded past the cap.
DensityWitness density_search(double delta, double gamma,
                              std::uint64_t scan_cap = kDensityScanCap);

struct VertexAdditionReport {
  Graph extended{1};
  std::size_t attached_to = 0;  // pendant only: the vertex i0
  double old_value = 0.0;
  double new_value = 0.0;
  double bound = 0.0;
  bool holds = false;
};
/// Adds a vertex adjacent to every vertex; checks lambda_max' >= (l + sqrt(l^2 + 4)) / 2.
VertexAdditionReport cone_lambda_max_bound(const Graph& g);
/// Adds a pendant at i0 = argmax |x_i| of the unit lambda_min eigenvector (lowest
/// index on ties); checks lambda_min' <= (l - sqrt(l^2 + 4/m)) / 2.
VertexAdditionReport pendant_lambda_min_bound(const Graph& g);

/// c_m ~= 261080 * 10^(1.4 (m - 9) + 0.09 (m - 9)^2).
double approx_count(std::size_t m);
/// Number of connected graphs of order m for 1 <= m <= 10.
std::optional<std::uint64_t> known_connected_count(std::size_t m) noexcept;

}  // namespace specgraph
