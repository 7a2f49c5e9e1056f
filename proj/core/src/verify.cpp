#include "specgraph/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "specgraph/bounds.hpp"
#include "specgraph/census.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/error.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/multipartite.hpp"
#include "specgraph/structure.hpp"

namespace specgraph {
namespace {

constexpr std::array<std::string_view, 8> kNames = {"prop1",  "prop2a",          "prop2b",    "prop3",
                                                    "prop4",  "bipartite-bound", "classical", "vertex-add"};

constexpr double kSpectrumAgreement = 1e-8;

double max_deviation(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void fail(CheckResult& r, const Graph& g, const std::string& why) {
  if (r.counterexample) return;
  r.passed = false;
  r.counterexample = encode_graph6(g);
  r.detail = why;
}

void check_prop1(CheckResult& r, std::size_t m, GraphStream& census) {
  for (const Partition& p : Partition::all_of(m)) {
    ++r.cases;
    const Graph g = families::complete_multipartite(p);
    const auto rep = multipartite_bounds_check(p);
    if (!rep.all()) fail(r, g, "multipartite bound violated");
    if (max_deviation(multipartite_spectrum(p).expand(), eigen_sym(g)) > kSpectrumAgreement) {
      fail(r, g, "analytic and numeric spectra differ");
    }
  }
  while (auto g = census.next()) {
    ++r.cases;
    const Spectrum s = eigen_sym(*g);
    const double tol = default_zero_tol(m);
    const bool one_positive = std::count_if(s.begin(), s.end(), [tol](double v) { return v > tol; }) == 1;
    if (one_positive != detect_complete_multipartite(*g).has_value()) {
      fail(r, *g, "one positive eigenvalue does not match multipartite structure");
    }
  }
}

void check_prop2a(CheckResult& r, GraphStream& census) {
  while (auto g = census.next()) {
    if (detect_complete_multipartite(*g)) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!nonmultipartite_bounds_check(*g).all()) fail(r, *g, "non-multipartite bound violated");
  }
}

void check_prop2b(CheckResult& r, std::size_t m, GraphStream& census) {
  const auto md = static_cast<double>(m);
  double best = -INFINITY;
  std::vector<Graph> witnesses;
  while (auto g = census.next()) {
    ++r.cases;
    const double v = compute_indices(eigen_sym(*g), default_zero_tol(m)).pow;
    if (v > best + 1e-9) {
      best = v;
      witnesses.clear();
    }
    if (v >= best - 1e-9) witnesses.push_back(*g);
  }
  const Graph km = canonical_form(families::complete(m));
  const bool complete_wins =
      std::any_of(witnesses.begin(), witnesses.end(), [&](const Graph& w) { return canonical_form(w) == km; });
  std::ostringstream os;
  os << "max pow " << format_fixed(best) << " with " << witnesses.size() << " witness(es)";
  r.detail = os.str();
  if (witnesses.empty()) {
    r.passed = false;
    r.detail = "empty census";
  } else if (m <= 7) {
    if (std::abs(best - (2.0 * md - 2.0)) > 1e-9 || !complete_wins) fail(r, witnesses.front(), "max pow is not 2m-2 at K_m");
    if (m == 7 && witnesses.size() != 2) fail(r, witnesses.front(), "expected exactly two maximisers at m = 7");
  } else if (!(best > 2.0 * md - 2.0 + 1e-9) || complete_wins) {
    fail(r, witnesses.front(), "expected a non-complete maximiser above 2m-2");
  }
  if (r.passed) r.detail = os.str();
}

void check_prop3(CheckResult& r, std::size_t m) {
  for (std::size_t n = 2; n <= m; ++n) {
    ++r.cases;
    const auto rep = kmm_minus_e_report(n);
    const Graph g = families::kmm_minus_e(n);
    if (!rep.sandwich_holds) fail(r, g, "gap sandwich fails");
    if (max_deviation(rep.spectrum.expand(), eigen_sym(g)) > kSpectrumAgreement) fail(r, g, "closed form disagrees");
  }
}

void check_prop4(CheckResult& r, std::size_t m) {
  for (std::size_t n = 2; n <= m; ++n) {
    ++r.cases;
    const auto rep = kmm_plus_e_report(n);
    const Graph g = families::kmm_plus_e(n);
    if (max_deviation(rep.spectrum.expand(), eigen_sym(g)) > kSpectrumAgreement) fail(r, g, "closed form disagrees");
    if (n < 3) continue;
    if (!rep.ordering_holds) fail(r, g, "eigenvalue ordering fails");
    if (std::abs(rep.lambda_minus + 1.0) > 1e-9) fail(r, g, "lambda_minus is not -1");
    if (!rep.expansion_holds) fail(r, g, "lambda_plus expansion fails");
  }
}

void check_bipartite(CheckResult& r, GraphStream& census) {
  while (auto g = census.next()) {
    if (!is_bipartite(*g) || detect_complete_multipartite(*g)) {
      ++r.skipped;
      continue;
    }
    BipartiteBoundReport rep;
    try {
      rep = bipartite_gap_bound(*g);
    } catch (const Error& e) {
      if (e.code() != Errc::not_applicable) throw;
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!rep.holds) fail(r, *g, "bipartite gap bound violated");
  }
}

void check_vertex_add(CheckResult& r, GraphStream& census) {
  while (auto g = census.next()) {
    if (g->order() < 2) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!cone_lambda_max_bound(*g).holds) fail(r, *g, "cone lambda_max bound violated");
    if (!pendant_lambda_min_bound(*g).holds) fail(r, *g, "pendant lambda_min bound violated");
  }
}

void check_classical(CheckResult& r, GraphStream& census) {
  const CensusReport report = run_census(census);
  r.cases = report.count;
  const ClassicalReport rep = verify_classical_extremes(report);
  for (const auto& it : rep.items) {
    if (!it.holds && !r.counterexample) {
      r.passed = false;
      r.counterexample = it.expected_graph6;
      r.detail = it.name + ": expected " + format_fixed(it.expected) + ", observed " + format_fixed(it.observed) +
                 (it.unique ? "" : " (extremal graph not unique or not the expected one)");
    }
  }
}

}  // namespace

std::string_view check_name(Check c) noexcept { return kNames[static_cast<std::size_t>(c)]; }

std::optional<Check> parse_check(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Check>(i);
  }
  return std::nullopt;
}

CheckResult run_check(Check check, std::size_t m, const std::optional<std::filesystem::path>& file) {
  if (m < 2) throw Error(Errc::invalid_order, "checks need order >= 2");
  CheckResult r;
  r.check = check;
  r.order = m;
  r.passed = true;
  switch (check) {
    case Check::prop3:
      check_prop3(r, m);
      return r;
    case Check::prop4:
      check_prop4(r, m);
      return r;
    default:
      break;
  }
  auto census = open_census_source(m, file);
  switch (check) {
    case Check::prop1: check_prop1(r, m, *census); break;
    case Check::prop2a: check_prop2a(r, *census); break;
    case Check::prop2b: check_prop2b(r, m, *census); break;
    case Check::bipartite_bound: check_bipartite(r, *census); break;
    case Check::classical: check_classical(r, *census); break;
    case Check::vertex_add: check_vertex_add(r, *census); break;
    default: break;
  }
  return r;
}

}  // namespace specgraph
