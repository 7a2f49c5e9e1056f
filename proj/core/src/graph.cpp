#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "specgraph/error.hpp"

namespace specgraph {
namespace {

std::size_t words_for(std::size_t order) {
  return (Graph::pair_count(order) + Graph::kWordBits - 1) / Graph::kWordBits;
}

void check_vertex(std::size_t v, std::size_t order) {
  if (v >= order) {
    throw Error(Errc::invalid_params,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order));
  }
}

}  // namespace

Graph::Graph(std::size_t order) : order_(order), words_(words_for(order), 0) {
  if (order == 0) throw Error(Errc::invalid_params, "graph order must be positive");
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    check_vertex(u, order);
    check_vertex(v, order);
    if (u == v) throw Error(Errc::invalid_params, "self-loop at vertex " + std::to_string(u));
    g.set_pair(pair_index(u, v), true);
  }
  return g;
}

Graph Graph::from_edges(std::size_t order, std::initializer_list<Edge> edges) {
  return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_words(std::size_t order, std::vector<Word> words) {
  if (order == 0) throw Error(Errc::invalid_params, "graph order must be positive");
  if (words.size() != words_for(order)) {
    throw Error(Errc::invalid_params, "word count does not match graph order");
  }
  const std::size_t used = pair_count(order) % kWordBits;
  if (used != 0 && (words.back() >> used) != 0) {
    throw Error(Errc::invalid_params, "bits set beyond the last vertex pair");
  }
  return Graph(order, std::move(words));
}

void Graph::set_pair(std::size_t pair, bool value) noexcept {
  const Word mask = Word{1} << (pair % kWordBits);
  if (value) {
    words_[pair / kWordBits] |= mask;
  } else {
    words_[pair / kWordBits] &= ~mask;
  }
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  check_vertex(u, order_);
  check_vertex(v, order_);
  if (u == v) return false;
  return pair_bit(pair_index(u, v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t v = 1; v < order_; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (pair_bit(pair_index(u, v))) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(order_, 0);
  for (std::size_t v = 1; v < order_; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (pair_bit(pair_index(u, v))) {
        ++deg[u];
        ++deg[v];
      }
    }
  }
  return deg;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  check_vertex(v, order_);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < order_; ++u) {
    if (u != v && pair_bit(pair_index(u, v))) out.push_back(u);
  }
  return out;
}

Graph Graph::with_edge(std::size_t u, std::size_t v) const {
  check_vertex(u, order_);
  check_vertex(v, order_);
  if (u == v) throw Error(Errc::invalid_params, "self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.set_pair(pair_index(u, v), true);
  return g;
}

Graph Graph::without_edge(std::size_t u, std::size_t v) const {
  check_vertex(u, order_);
  check_vertex(v, order_);
  Graph g = *this;
  if (u != v) g.set_pair(pair_index(u, v), false);
  return g;
}

Graph Graph::with_vertex(std::span<const std::size_t> neighbors) const {
  // Pairs of the old vertices keep their indices; the new column is appended.
  Graph g(order_ + 1);
  std::copy(words_.begin(), words_.end(), g.words_.begin());
  for (std::size_t u : neighbors) {
    check_vertex(u, order_);
    g.set_pair(pair_index(u, order_), true);
  }
  return g;
}

Graph Graph::without_vertex(std::size_t v) const {
  check_vertex(v, order_);
  if (order_ == 1) throw Error(Errc::invalid_params, "cannot delete the only vertex");
  Graph g(order_ - 1);
  auto relabel = [v](std::size_t x) { return x > v ? x - 1 : x; };
  for (auto [a, b] : edges()) {
    if (a != v && b != v) g.set_pair(pair_index(relabel(a), relabel(b)), true);
  }
  return g;
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != order_) throw Error(Errc::invalid_params, "permutation size mismatch");
  std::vector<bool> seen(order_, false);
  for (std::size_t p : perm) {
    check_vertex(p, order_);
    if (seen[p]) throw Error(Errc::invalid_params, "not a permutation");
    seen[p] = true;
  }
  Graph g(order_);
  for (auto [a, b] : edges()) g.set_pair(pair_index(perm[a], perm[b]), true);
  return g;
}

Graph Graph::complement() const {
  Graph g(order_);
  const std::size_t pairs = pair_count(order_);
  for (std::size_t p = 0; p < pairs; ++p) g.set_pair(p, !pair_bit(p));
  return g;
}

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::invalid_partition, "partition has no parts");
  for (std::size_t s : parts_) {
    if (s == 0) throw Error(Errc::invalid_partition, "partition part of size zero");
  }
  std::sort(parts_.begin(), parts_.end());
  order_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::vector<Partition> Partition::all_of(std::size_t m, std::size_t min_parts) {
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  // Non-decreasing parts, each at least the previous one.
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t min_part) -> void {
    if (remaining == 0) {
      if (current.size() >= min_parts) out.emplace_back(current);
      return;
    }
    for (std::size_t s = min_part; s <= remaining; ++s) {
      if (s != remaining && remaining - s < s) continue;
      current.push_back(s);
      self(self, remaining - s, s);
      current.pop_back();
    }
  };
  if (m > 0) recurse(recurse, m, 1);
  return out;
}

namespace families {

Graph complete(std::size_t m) {
  Graph g(m);
  return g.complement();
}

Graph path(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v < m; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(m, e);
}

Graph cycle(std::size_t m) {
  if (m < 3) throw Error(Errc::invalid_params, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t v = 1; v < m; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(0, m - 1);
  return Graph::from_edges(m, e);
}

Graph star(std::size_t m) {
  if (m < 2) throw Error(Errc::invalid_params, "star needs at least 2 vertices");
  return complete_multipartite(Partition({1, m - 1}));
}

Graph complete_multipartite(const Partition& p) {
  if (p.part_count() < 2) {
    throw Error(Errc::invalid_params, "complete multipartite graph needs at least two parts");
  }
  std::vector<std::size_t> block(p.order());
  std::size_t v = 0;
  for (std::size_t b = 0; b < p.part_count(); ++b) {
    for (std::size_t i = 0; i < p.parts()[b]; ++i) block[v++] = b;
  }
  std::vector<Edge> e;
  for (std::size_t j = 1; j < p.order(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (block[i] != block[j]) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(p.order(), e);
}

Graph kmm_minus_e(std::size_t m) {
  if (m < 2) throw Error(Errc::invalid_params, "K_{m,m}^{-e} needs m >= 2");
  return complete_multipartite(Partition({m, m})).without_edge(0, m);
}

Graph kmm_plus_e(std::size_t m) {
  if (m < 2) throw Error(Errc::invalid_params, "K_{m,m}^{+e} needs m >= 2");
  return complete_multipartite(Partition({m, m})).with_edge(0, 1);
}

}  // namespace families
}  // namespace specgraph
