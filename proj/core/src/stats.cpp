#include "specgraph/stats.hpp"

#include <algorithm>
#include <cmath>

#include "specgraph/error.hpp"
#include "specgraph/graph6.hpp"

namespace specgraph {

void IndexStats::Witnesses::add(const std::string& g6) {
  ++total;
  auto it = std::lower_bound(kept.begin(), kept.end(), g6);
  if (it != kept.end() && *it == g6) return;
  if (kept.size() == kWitnessCap && it == kept.end()) return;
  kept.insert(it, g6);
  if (kept.size() > kWitnessCap) kept.pop_back();
}

void IndexStats::Witnesses::absorb(const Witnesses& other) {
  total += other.total;
  std::vector<std::string> merged;
  merged.reserve(kept.size() + other.kept.size());
  std::set_union(kept.begin(), kept.end(), other.kept.begin(), other.kept.end(),
                 std::back_inserter(merged));
  if (merged.size() > kWitnessCap) merged.resize(kWitnessCap);
  kept = std::move(merged);
}

bool IndexStats::touches_min(double value) const noexcept {
  return count_ == 0 || value <= min_ + kWitnessTol;
}

bool IndexStats::touches_max(double value) const noexcept {
  return count_ == 0 || value >= max_ - kWitnessTol;
}

void IndexStats::update_moments(double value) {
  // Terriberry's one-pass update of the central power sums.
  const auto n1 = static_cast<double>(count_);
  ++count_;
  const auto n = static_cast<double>(count_);
  const double delta = value - mean_;
  const double delta_n = delta / n;
  const double delta_n2 = delta_n * delta_n;
  const double term1 = delta * delta_n * n1;
  mean_ += delta_n;
  m4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2_ - 4.0 * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2_;
  m2_ += term1;
}

void IndexStats::record_extremes(double value, const std::string* witness) {
  if (count_ == 1) {
    min_ = max_ = value;
    if (witness != nullptr) {
      argmin_.add(*witness);
      argmax_.add(*witness);
    }
    return;
  }
  if (value < min_ - kWitnessTol) {
    min_ = value;
    argmin_.reset();
    if (witness != nullptr) argmin_.add(*witness);
  } else if (value <= min_ + kWitnessTol) {
    min_ = std::min(min_, value);
    if (witness != nullptr) argmin_.add(*witness);
  }
  if (value > max_ + kWitnessTol) {
    max_ = value;
    argmax_.reset();
    if (witness != nullptr) argmax_.add(*witness);
  } else if (value >= max_ - kWitnessTol) {
    max_ = std::max(max_, value);
    if (witness != nullptr) argmax_.add(*witness);
  }
}

void IndexStats::update(double value, const Graph& witness) {
  if (touches_min(value) || touches_max(value)) {
    const std::string g6 = encode_graph6(witness);
    update_moments(value);
    record_extremes(value, &g6);
  } else {
    update_moments(value);
    record_extremes(value, nullptr);
  }
}

void IndexStats::update(double value, const std::string& witness_graph6) {
  update_moments(value);
  record_extremes(value, &witness_graph6);
}

void IndexStats::update(double value) {
  update_moments(value);
  record_extremes(value, nullptr);
}

void IndexStats::merge(const IndexStats& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  // Pairwise combination of central power sums (Chan et al. / Pebay).
  const auto na = static_cast<double>(count_);
  const auto nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  const double d2 = delta * delta;
  const double d3 = d2 * delta;
  const double d4 = d2 * d2;

  const double m2 = m2_ + other.m2_ + d2 * na * nb / n;
  const double m3 = m3_ + other.m3_ + d3 * na * nb * (na - nb) / (n * n) +
                    3.0 * delta * (na * other.m2_ - nb * m2_) / n;
  const double m4 = m4_ + other.m4_ + d4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                    6.0 * d2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
                    4.0 * delta * (na * other.m3_ - nb * m3_) / n;
  mean_ = (na * mean_ + nb * other.mean_) / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
  count_ += other.count_;

  if (other.min_ < min_ - kWitnessTol) {
    min_ = other.min_;
    argmin_ = other.argmin_;
  } else if (other.min_ <= min_ + kWitnessTol) {
    min_ = std::min(min_, other.min_);
    argmin_.absorb(other.argmin_);
  }
  if (other.max_ > max_ + kWitnessTol) {
    max_ = other.max_;
    argmax_ = other.argmax_;
  } else if (other.max_ >= max_ - kWitnessTol) {
    max_ = std::max(max_, other.max_);
    argmax_.absorb(other.argmax_);
  }
}

double IndexStats::sample_std() const {
  if (count_ == 0) throw Error(Errc::insufficient_data, "standard deviation of an empty stream");
  if (count_ == 1) return 0.0;
  return std::sqrt(m2_ / static_cast<double>(count_ - 1));
}

double IndexStats::skewness() const {
  if (count_ < 2 || !(m2_ > 0.0)) throw Error(Errc::insufficient_data, "skewness needs spread");
  const auto n = static_cast<double>(count_);
  return (m3_ / n) / std::pow(m2_ / n, 1.5);
}

double IndexStats::kurtosis() const {
  if (count_ < 2 || !(m2_ > 0.0)) throw Error(Errc::insufficient_data, "kurtosis needs spread");
  const auto n = static_cast<double>(count_);
  const double var = m2_ / n;
  return (m4_ / n) / (var * var);
}

StatsSummary IndexStats::finalize() const {
  if (count_ == 0) throw Error(Errc::insufficient_data, "finalize on an empty stream");
  StatsSummary s;
  s.count = count_;
  s.mean = mean_;
  s.std = sample_std();
  if (count_ >= 2 && m2_ > 0.0) {
    s.skewness = skewness();
    s.kurtosis = kurtosis();
  }
  s.min = min_;
  s.max = max_;
  s.argmin = argmin_.kept;
  s.argmax = argmax_.kept;
  s.argmin_total = argmin_.total;
  s.argmax_total = argmax_.total;
  return s;
}

Histogram::Histogram(double bin_width, double origin) : width_(bin_width), origin_(origin) {
  if (!(bin_width > 0.0)) throw Error(Errc::invalid_params, "histogram bin width must be positive");
}

void Histogram::add(double value) {
  // The nudge keeps values that are integers up to rounding (e.g. 1.9999999999999996)
  // in the bin they belong to.
  const double pos = (value - origin_) / width_ + 1e-9;
  ++bins_[static_cast<std::int64_t>(std::floor(pos))];
}

void Histogram::merge(const Histogram& other) {
  for (const auto& [bin, count] : other.bins_) bins_[bin] += count;
}

std::uint64_t Histogram::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& entry : bins_) t += entry.second;
  return t;
}

std::vector<Histogram::Row> Histogram::rows() const {
  std::vector<Row> out;
  if (bins_.empty()) return out;
  const std::int64_t first = bins_.begin()->first;
  const std::int64_t last = bins_.rbegin()->first;
  for (std::int64_t i = first; i <= last; ++i) {
    const auto it = bins_.find(i);
    const double lo = origin_ + static_cast<double>(i) * width_;
    out.push_back(Row{lo, lo + width_, it == bins_.end() ? 0 : it->second});
  }
  return out;
}

}  // namespace specgraph
