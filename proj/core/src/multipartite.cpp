#include "specgraph/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "specgraph/error.hpp"

namespace specgraph {
namespace {

constexpr double kPoleTol = 1e-12;

double psi_unchecked(double lambda, std::span<const std::size_t> parts) {
  double sum = 0.0;
  for (std::size_t s : parts) {
    const auto ms = static_cast<double>(s);
    sum += ms / (lambda + ms);
  }
  return sum;
}

// psi is strictly decreasing on each interval between consecutive poles;
// keeps psi(lo) > 1 >= psi(hi).
std::pair<double, double> bisect_dispersion(double lo, double hi,
                                            std::span<const std::size_t> parts) {
  while (hi - lo > kRootWidth) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (psi_unchecked(mid, parts) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace

std::string_view provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::fixed_part_value: return "fixed_part_value";
    case Provenance::dispersion_root: return "dispersion_root";
    case Provenance::closed_form: return "closed_form";
    case Provenance::zero_block: return "zero_block";
  }
  return "";
}

AnalyticSpectrum::AnalyticSpectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
}

std::size_t AnalyticSpectrum::total() const noexcept {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

Spectrum AnalyticSpectrum::expand() const {
  std::vector<double> values;
  values.reserve(total());
  for (const auto& e : entries_) values.insert(values.end(), e.multiplicity, e.value);
  return Spectrum(std::move(values));
}

double psi(double lambda, const Partition& p) {
  for (std::size_t s : p.parts()) {
    if (std::abs(lambda + static_cast<double>(s)) <= kPoleTol) {
      throw Error(Errc::pole_input, "lambda = -" + std::to_string(s) + " is a pole of psi");
    }
  }
  return psi_unchecked(lambda, p.parts());
}

Spectrum reduced_matrix_spectrum(const Partition& p) {
  const std::size_t k = p.part_count();
  DenseMatrix a(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) a(i, j) = std::sqrt(static_cast<double>(p.parts()[i] * p.parts()[j]));
    }
  }
  return eigenvalues_sym(a);
}

AnalyticSpectrum multipartite_spectrum(const Partition& p) {
  const std::size_t k = p.part_count();
  if (k < 2) throw Error(Errc::invalid_partition, "a multipartite graph needs at least two parts");
  const auto parts = p.parts();
  const auto m = static_cast<double>(p.order());

  std::vector<SpectrumEntry> entries;

  // Runs of equal part sizes: -s with multiplicity (run length - 1).
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j < k && parts[j] == parts[i]) ++j;
    if (j - i > 1) {
      entries.push_back({-static_cast<double>(parts[i]), j - i - 1, Provenance::fixed_part_value, {}});
    }
    distinct.push_back(parts[i]);
    i = j;
  }

  // One dispersion root strictly between consecutive distinct poles.
  for (std::size_t j = 0; j + 1 < distinct.size(); ++j) {
    const auto [lo, hi] = bisect_dispersion(-static_cast<double>(distinct[j + 1]),
                                            -static_cast<double>(distinct[j]), parts);
    entries.push_back({lo + 0.5 * (hi - lo), 1, Provenance::dispersion_root, std::make_pair(lo, hi)});
  }

  // The positive root lies in (0, m - m/k]; the right end is attained by equipartitions.
  const double upper = m - m / static_cast<double>(k);
  if (psi_unchecked(upper, parts) == 1.0) {
    entries.push_back({upper, 1, Provenance::dispersion_root, std::make_pair(upper, upper)});
  } else {
    const auto [lo, hi] = bisect_dispersion(0.0, upper, parts);
    entries.push_back({lo + 0.5 * (hi - lo), 1, Provenance::dispersion_root, std::make_pair(lo, hi)});
  }

  std::size_t nonzero = 0;
  for (const auto& e : entries) nonzero += e.multiplicity;
  if (nonzero != k) {
    throw Error(Errc::internal_defect, "nonzero multiplicities sum to " + std::to_string(nonzero) +
                                           ", expected " + std::to_string(k));
  }

  // Cross-check the k nonzero values against the reduced matrix.
  AnalyticSpectrum nonzero_part(entries);
  const Spectrum analytic = nonzero_part.expand();
  const Spectrum numeric = reduced_matrix_spectrum(p);
  const double scale = std::max(1.0, static_cast<double>(p.largest()));
  for (std::size_t i = 0; i < k; ++i) {
    if (std::abs(analytic[i] - numeric[i]) > kRouteAgreement * scale) {
      throw Error(Errc::internal_defect,
                  "dispersion and reduced-matrix routes disagree: " + std::to_string(analytic[i]) +
                      " vs " + std::to_string(numeric[i]));
    }
  }

  if (p.order() > k) entries.push_back({0.0, p.order() - k, Provenance::zero_block, {}});
  return AnalyticSpectrum(std::move(entries));
}

std::vector<double> depressed_cubic_roots(double r, double s) {
  if (r == 0.0 && s == 0.0) return {0.0, 0.0, 0.0};
  const double disc = -(4.0 * r * r * r + 27.0 * s * s);
  std::vector<double> roots;
  if (disc >= 0.0 && r < 0.0) {
    const double amp = 2.0 * std::sqrt(-r / 3.0);
    const double arg = std::clamp(1.5 * s / r * std::sqrt(-3.0 / r), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int j = 0; j < 3; ++j) {
      roots.push_back(amp * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0));
    }
  } else {
    const double h = std::sqrt(s * s / 4.0 + r * r * r / 27.0);
    roots.push_back(std::cbrt(-s / 2.0 + h) + std::cbrt(-s / 2.0 - h));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

std::array<double, 3> tripartite_roots(std::size_t m1, std::size_t m2, std::size_t m3) {
  if (m1 == 0 || m2 == 0 || m3 == 0) throw Error(Errc::invalid_partition, "part sizes must be positive");
  if (m1 == m2 && m2 == m3) {
    // Zero discriminant: simple root 2a and double root -a.
    const auto a = static_cast<double>(m1);
    return {2.0 * a, -a, -a};
  }
  const auto a = static_cast<double>(m1);
  const auto b = static_cast<double>(m2);
  const auto c = static_cast<double>(m3);
  const double r = -(a * b + b * c + a * c);
  const double s = -2.0 * a * b * c;
  const auto roots = depressed_cubic_roots(r, s);
  if (roots.size() != 3) throw Error(Errc::internal_defect, "tripartite cubic lost real roots");
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    // One Newton step tidies the trigonometric evaluation.
    double x = roots[i];
    const double f = (x * x + r) * x + s;
    const double df = 3.0 * x * x + r;
    if (df != 0.0) x -= f / df;
    out[i] = x;
  }
  return out;
}

}  // namespace specgraph
