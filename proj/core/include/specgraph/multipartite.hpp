#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "specgraph/eigen.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

enum class Provenance { fixed_part_value, dispersion_root, closed_form, zero_block };

std::string_view provenance_name(Provenance p) noexcept;

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
  Provenance provenance = Provenance::closed_form;
  // Set for dispersion roots: an interval of width <= kRootWidth on whose
  // ends psi(lambda) - 1 has opposite signs.
  std::optional<std::pair<double, double>> bracket;
};

/// Eigenvalues with multiplicities and where each one came from.
class AnalyticSpectrum {
 public:
  AnalyticSpectrum() = default;
  explicit AnalyticSpectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const& noexcept { return entries_; }
  std::vector<SpectrumEntry> entries() && { return std::move(entries_); }
  std::size_t total() const noexcept;
  /// Flattened, descending.
  Spectrum expand() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Bisection stops once the bracket is this narrow.
inline constexpr double kRootWidth = 1e-12;
/// Agreement demanded between the dispersion path and the reduced-matrix path.
inline constexpr double kRouteAgreement = 1e-9;

/// psi(lambda) = sum_i m_i / (lambda + m_i). Throws pole_input within 1e-12 of a pole.
double psi(double lambda, const Partition& p);

/// Spectrum of K_{m1..mk} from the dispersion equation psi(lambda) = 1:
///   -s with multiplicity (c - 1) for each part size s occurring c times,
///   one root of psi = 1 in every gap (-s_{j+1}, -s_j) between distinct sizes,
///   one positive root in (0, m - m/k], and zero with multiplicity m - k.
/// The k nonzero values are cross-checked against the reduced k x k matrix;
/// a disagreement beyond kRouteAgreement throws internal_defect.
AnalyticSpectrum multipartite_spectrum(const Partition& p);

/// Numeric route: eigenvalues of the k x k matrix with entries m_i off the
/// diagonal, computed via its symmetric similar form sqrt(m_i m_j).
Spectrum reduced_matrix_spectrum(const Partition& p);

/// Real roots of t^3 + r t + s = 0, descending. Three roots when the
/// discriminant -(4r^3 + 27s^2) >= 0 (trigonometric form), else one (Cardano).
std::vector<double> depressed_cubic_roots(double r, double s);

/// Nonzero eigenvalues of K_{m1,m2,m3}: roots of lambda^3 + r lambda + s = 0 with
/// r = -(m1 m2 + m2 m3 + m1 m3), s = -2 m1 m2 m3. Descending.
std::array<double, 3> tripartite_roots(std::size_t m1, std::size_t m2, std::size_t m3);

/// K_{m,m} minus one edge: 2m-4 zeros and +-(1 - m +- sqrt(m^2 + 2m - 3)) / 2.
AnalyticSpectrum kmm_minus_e_spectrum(std::size_t m);

struct MinusEdgeReport {
  std::size_t m = 0;
  AnalyticSpectrum spectrum;
  double gap = 0.0;          // 1 - m + sqrt(m^2 + 2m - 3), evaluated without cancellation
  double lower_bound = 0.0;  // 2 sqrt(1 - 2/(m+1))
  double upper_bound = 0.0;  // 2 sqrt(1 - 1/m)
  bool sandwich_holds = false;
  double limit_residual = 0.0;  // |gap - 2|
};
MinusEdgeReport kmm_minus_e_report(std::size_t m);

/// K_{m,m} plus one edge inside a part: 2m-4 zeros, -1, and the three roots of
/// lambda^2 (1 - lambda) - m (m - 2 - m lambda) = 0.
AnalyticSpectrum kmm_plus_e_spectrum(std::size_t m);

struct PlusEdgeReport {
  std::size_t m = 0;
  AnalyticSpectrum spectrum;
  std::array<double, 3> cubic_roots{};  // lambda^(1) > lambda^(2) > lambda^(3)
  double lambda_minus = -1.0;
  double lambda_plus = 0.0;  // lambda^(2) for m >= 3
  double gap = 0.0;
  double ind = 0.0;
  bool ordering_holds = false;  // lambda^(3) < -1 < 0 < lambda^(2) < lambda^(1); m >= 3
  // |lambda^(2) - (1 - 2/m - 2/m^3)| against 10/m^4, asserted for 4 <= m <= kExpansionMaxOrder.
  std::optional<double> expansion_residual;
  std::optional<double> expansion_bound;
  bool expansion_holds = true;
  double gap_limit_residual = 0.0;  // |gap - 2|
  double ind_limit_residual = 0.0;  // |ind - 1|
};
inline constexpr std::size_t kExpansionMaxOrder = 10000;
PlusEdgeReport kmm_plus_e_report(std::size_t m);

}  // namespace specgraph
