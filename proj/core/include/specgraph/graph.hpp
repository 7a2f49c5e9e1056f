#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace specgraph {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph stored as a bitset over unordered vertex pairs.
///
/// Pair (i, j) with i < j lives at bit index j(j-1)/2 + i, i.e. the
/// column-major upper triangle (0,1),(0,2),(1,2),(0,3),... This is the
/// graph6 payload order, so encoding and decoding are straight bit copies.
/// Values are immutable; the "with_*" members return modified copies.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// Edgeless graph on `order` vertices (order >= 1).
  explicit Graph(std::size_t order);

  static Graph from_edges(std::size_t order, std::span<const Edge> edges);
  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges);
  /// Adopts a packed pair bitset. Bits at or beyond pair_count(order) must be zero.
  static Graph from_words(std::size_t order, std::vector<Word> words);

  static constexpr std::size_t pair_index(std::size_t u, std::size_t v) noexcept {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
  }
  static constexpr std::size_t pair_count(std::size_t order) noexcept {
    return order * (order - 1) / 2;
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept;
  bool has_edge(std::size_t u, std::size_t v) const;
  bool pair_bit(std::size_t pair) const noexcept {
    return (words_[pair / kWordBits] >> (pair % kWordBits)) & 1U;
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  Graph with_edge(std::size_t u, std::size_t v) const;
  Graph without_edge(std::size_t u, std::size_t v) const;
  /// Appends vertex `order()` adjacent to exactly `neighbors`.
  Graph with_vertex(std::span<const std::size_t> neighbors) const;
  Graph without_vertex(std::size_t v) const;
  /// Relabels vertex i as perm[i]; perm must be a permutation of 0..m-1.
  Graph permuted(std::span<const std::size_t> perm) const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::size_t order, std::vector<Word> words) : order_(order), words_(std::move(words)) {}
  void set_pair(std::size_t pair, bool value) noexcept;

  std::size_t order_;
  std::vector<Word> words_;
};

/// Sorted part sizes m1 <= ... <= mk of a complete multipartite graph.
class Partition {
 public:
  /// Sorts the sizes ascending. Throws invalid_partition on an empty list or a zero part.
  explicit Partition(std::vector<std::size_t> parts);

  std::span<const std::size_t> parts() const noexcept { return parts_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::size_t largest() const noexcept { return parts_.back(); }

  /// All partitions of m with at least `min_parts` parts, in a fixed order.
  static std::vector<Partition> all_of(std::size_t m, std::size_t min_parts = 2);

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t order_ = 0;
};

namespace families {

Graph complete(std::size_t m);
Graph path(std::size_t m);
/// m >= 3.
Graph cycle(std::size_t m);
/// S_m = K_{m-1,1}; vertex 0 is the centre. m >= 2.
Graph star(std::size_t m);
/// Parts occupy consecutive vertex blocks in ascending size order. k >= 2.
Graph complete_multipartite(const Partition& p);
/// K_{m,m} with the edge (0, m) removed. m >= 2.
Graph kmm_minus_e(std::size_t m);
/// K_{m,m} with the edge (0, 1) added inside the first part. m >= 2.
Graph kmm_plus_e(std::size_t m);

}  // namespace families

}  // namespace specgraph
