#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/eigen.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/indices.hpp"
#include "specgraph/stats.hpp"

namespace specgraph {

/// Pull-based source of graphs.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<Graph> next() = 0;
  /// Graphs skipped because they were disconnected.
  virtual std::uint64_t rejected() const noexcept { return 0; }
};

class VectorGraphStream final : public GraphStream {
 public:
  explicit VectorGraphStream(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  std::optional<Graph> next() override;

 private:
  std::vector<Graph> graphs_;
  std::size_t pos_ = 0;
};

/// One graph6 string per line. Blank lines and a leading ">>graph6<<" marker
/// are skipped; disconnected graphs are counted in rejected() and dropped.
/// Decode errors are rethrown with the line number prepended.
class Graph6FileStream final : public GraphStream {
 public:
  explicit Graph6FileStream(const std::filesystem::path& path);
  std::optional<Graph> next() override;
  std::uint64_t rejected() const noexcept override { return rejected_; }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::uint64_t line_ = 0;
  std::uint64_t rejected_ = 0;
};

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Connected graphs on m vertices, one per isomorphism class, m in 1..7.
/// Each is the labelling with the smallest pair bitset (read as an integer,
/// highest pair index most significant); output is ascending in that order.
std::vector<Graph> enumerate_connected(std::size_t m);

inline constexpr std::size_t kMaxCanonicalOrder = 9;
/// The minimal-bitset relabelling of g (brute force over permutations, m <= 9).
Graph canonical_form(const Graph& g);

/// Built-in enumeration for m <= 7, otherwise the given file.
std::unique_ptr<GraphStream> open_census_source(std::size_t m,
                                                const std::optional<std::filesystem::path>& file);

struct CensusOptions {
  std::optional<double> zero_tol;  // default_zero_tol(m) when empty
  unsigned threads = 0;            // 0: hardware concurrency
  double bin_width = 0.1;
  std::size_t block_size = 4096;
};

struct CensusReport {
  std::size_t order = 0;
  std::uint64_t count = 0;
  std::uint64_t rejected = 0;
  std::array<IndexStats, kAllIndices.size()> stats{};
  std::array<Histogram, kAllIndices.size()> histograms{};

  const IndexStats& of(IndexKind k) const { return stats[static_cast<std::size_t>(k)]; }
  const Histogram& histogram(IndexKind k) const { return histograms[static_cast<std::size_t>(k)]; }
};

/// Per-graph spectrum and indices folded into five IndexStats and histograms.
/// The result does not depend on options.threads. Throws mixed_orders.
CensusReport run_census(GraphStream& source, const CensusOptions& options = {});

enum class Direction { min, max };

struct ExtremalWitness {
  std::string graph6;
  std::vector<Edge> edges;
  Spectrum spectrum;
};

struct ExtremalResult {
  IndexKind index = IndexKind::gap;
  Direction direction = Direction::min;
  double value = 0.0;
  std::vector<ExtremalWitness> witnesses;  // every graph within 1e-9, stream order
};

/// Throws empty_source when the stream yields nothing.
ExtremalResult extremal(GraphStream& source, IndexKind index, Direction direction,
                        std::optional<double> zero_tol = std::nullopt);

struct ClassicalItem {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  std::string expected_graph6;  // canonical form of the expected extremal graph
  bool unique = false;          // only that graph attains the value
  bool holds = false;
};

struct ClassicalReport {
  std::size_t order = 0;
  std::vector<ClassicalItem> items;
  bool all() const noexcept;
};

/// Known extremes over a census report: max lambda_max = m-1 at K_m,
/// min lambda_max = 2cos(pi/(m+1)) at P_m, min lambda_min = -sqrt(floor(m/2)ceil(m/2))
/// at K_{ceil(m/2),floor(m/2)}, max lambda_min = -1 at K_m, min pow = 2 sqrt(m-1) at S_m.
ClassicalReport verify_classical_extremes(const CensusReport& report);

/// "%.6f" with negative zero printed as zero.
std::string format_fixed(double value);

void write_stats_csv(std::ostream& out, const CensusReport& report);
void write_histogram_csv(std::ostream& out, const Histogram& histogram);
/// Writes stats.csv and hist_<index>.csv into dir; returns the paths written.
std::vector<std::filesystem::path> write_census_csv(const CensusReport& report,
                                                    const std::filesystem::path& dir);

}  // namespace specgraph
