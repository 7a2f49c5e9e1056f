#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Finalized descriptive statistics.
///
/// Conventions (the combination that reproduces the published census tables):
///   std      = sqrt(M2 / (n - 1))          Bessel-corrected; 0 for a single value
///   skewness = (M3 / n) / (M2 / n)^{3/2}    population moment ratio
///   kurtosis = (M4 / n) / (M2 / n)^2        population, NOT excess
/// Skewness and kurtosis are empty when M2 == 0.
struct StatsSummary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double std = 0.0;
  std::optional<double> skewness;
  std::optional<double> kurtosis;
  double min = 0.0;
  double max = 0.0;
  std::vector<std::string> argmin;
  std::vector<std::string> argmax;
  std::uint64_t argmin_total = 0;
  std::uint64_t argmax_total = 0;
};

/// One-pass central moments (orders 2..4) with mergeable partial results,
/// plus extremes and the graphs attaining them.
///
/// Witnesses are graph6 strings within kWitnessTol of the extreme. At most
/// kWitnessCap are kept: the lexicographically smallest ones, so the kept
/// set does not depend on update or merge order. The total is still counted.
class IndexStats {
 public:
  static constexpr std::size_t kWitnessCap = 16;
  static constexpr double kWitnessTol = 1e-9;

  void update(double value, const Graph& witness);
  void update(double value, const std::string& witness_graph6);
  /// Moments only, no witness tracking.
  void update(double value);
  void merge(const IndexStats& other);

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double m2() const noexcept { return m2_; }
  double m3() const noexcept { return m3_; }
  double m4() const noexcept { return m4_; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  const std::vector<std::string>& argmin() const noexcept { return argmin_.kept; }
  const std::vector<std::string>& argmax() const noexcept { return argmax_.kept; }
  std::uint64_t argmin_total() const noexcept { return argmin_.total; }
  std::uint64_t argmax_total() const noexcept { return argmax_.total; }

  /// Throws insufficient_data on an empty accumulator.
  double sample_std() const;
  /// Throws insufficient_data when count < 2 or M2 == 0.
  double skewness() const;
  double kurtosis() const;
  /// Throws insufficient_data when count == 0.
  StatsSummary finalize() const;

 private:
  struct Witnesses {
    std::vector<std::string> kept;  // sorted, at most kWitnessCap
    std::uint64_t total = 0;

    void add(const std::string& g6);
    void absorb(const Witnesses& other);
    void reset() {
      kept.clear();
      total = 0;
    }
  };

  void update_moments(double value);
  // Returns which extremes the value touches (within tolerance) so callers
  // only encode a witness graph when needed.
  bool touches_min(double value) const noexcept;
  bool touches_max(double value) const noexcept;
  void record_extremes(double value, const std::string* witness);

  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
  Witnesses argmin_;
  Witnesses argmax_;
};

inline IndexStats stats_merge(IndexStats a, const IndexStats& b) {
  a.merge(b);
  return a;
}

/// Fixed-width histogram over a sparse bin map; bins are [origin + i*w, origin + (i+1)*w).
class Histogram {
 public:
  struct Row {
    double lo;
    double hi;
    std::uint64_t count;
  };

  Histogram() : Histogram(0.1, 0.0) {}
  explicit Histogram(double bin_width, double origin = 0.0);

  void add(double value);
  void merge(const Histogram& other);

  double bin_width() const noexcept { return width_; }
  double origin() const noexcept { return origin_; }
  std::uint64_t total() const noexcept;
  /// Contiguous rows from the lowest to the highest occupied bin (empty bins included).
  std::vector<Row> rows() const;

 private:
  double width_;
  double origin_;
  std::map<std::int64_t, std::uint64_t> bins_;
};

}  // namespace specgraph
