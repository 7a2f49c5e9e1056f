#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "specgraph/census.hpp"
#include "specgraph/error.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/structure.hpp"

namespace specgraph {
namespace {

using Mask = std::uint64_t;

// For each permutation, src[q] is the pair of the original graph that lands on
// pair q after relabelling.
struct PermTable {
  std::size_t pairs = 0;
  std::vector<std::uint8_t> src;  // perm-major, pairs entries each
  std::size_t perms = 0;
};

PermTable build_perm_table(std::size_t m) {
  PermTable t;
  t.pairs = Graph::pair_count(m);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const std::size_t base = t.src.size();
    t.src.resize(base + t.pairs);
    for (std::size_t j = 1; j < m; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        t.src[base + Graph::pair_index(perm[i], perm[j])] =
            static_cast<std::uint8_t>(Graph::pair_index(i, j));
      }
    }
    ++t.perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

// Adjacency rows as bitmasks.
void rows_of(Mask mask, std::size_t m, std::array<std::uint32_t, 32>& rows) {
  std::fill(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(m), 0U);
  std::size_t p = 0;
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++p) {
      if ((mask >> p) & 1U) {
        rows[i] |= 1U << j;
        rows[j] |= 1U << i;
      }
    }
  }
}

bool connected_mask(const std::array<std::uint32_t, 32>& rows, std::size_t m) {
  const std::uint32_t all = (m == 32) ? ~0U : ((1U << m) - 1U);
  std::uint32_t seen = 1U;
  std::uint32_t frontier = 1U;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

bool is_minimal(Mask mask, const PermTable& t) {
  for (std::size_t k = 0; k < t.perms; ++k) {
    const std::uint8_t* src = &t.src[k * t.pairs];
    for (std::size_t q = t.pairs; q-- > 0;) {
      const Mask mine = (mask >> q) & 1U;
      const Mask theirs = (mask >> src[q]) & 1U;
      if (theirs != mine) {
        if (theirs < mine) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Graph> enumerate_connected(std::size_t m) {
  if (m == 0) throw Error(Errc::invalid_order, "order must be at least 1");
  if (m > kMaxEnumerationOrder) {
    throw Error(Errc::order_too_large,
                "built-in enumeration stops at order 7; supply a graph6 file");
  }
  if (m == 1) return {Graph(1)};

  const PermTable table = build_perm_table(m);
  const std::size_t pairs = table.pairs;
  const std::size_t last_col = Graph::pair_index(0, m - 1);
  std::array<std::uint32_t, 32> rows{};
  std::vector<Graph> out;

  for (Mask mask = 0; mask < (Mask{1} << pairs); ++mask) {
    // The last vertex column is the most significant block, so a minimal
    // labelling puts a minimum-degree vertex last, joined to 0..d-1.
    const Mask col = mask >> last_col;
    if (col == 0 || (col & (col + 1)) != 0) continue;
    rows_of(mask, m, rows);
    const int d = std::popcount(col);
    bool min_last = true;
    for (std::size_t v = 0; v + 1 < m && min_last; ++v) min_last = std::popcount(rows[v]) >= d;
    if (!min_last || !connected_mask(rows, m)) continue;
    if (!is_minimal(mask, table)) continue;
    out.push_back(Graph::from_words(m, {mask}));
  }
  return out;
}

Graph canonical_form(const Graph& g) {
  const std::size_t m = g.order();
  if (m > kMaxCanonicalOrder) throw Error(Errc::order_too_large, "canonical_form supports order <= 9");
  if (m == 1) return g;
  Mask mask = g.words().empty() ? 0 : g.words()[0];
  const std::size_t pairs = Graph::pair_count(m);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Mask best = mask;
  std::vector<std::size_t> src(pairs);
  do {
    for (std::size_t j = 1; j < m; ++j) {
      for (std::size_t i = 0; i < j; ++i) src[Graph::pair_index(perm[i], perm[j])] = Graph::pair_index(i, j);
    }
    Mask img = 0;
    bool abandon = false;
    for (std::size_t q = pairs; q-- > 0;) {
      img |= ((mask >> src[q]) & 1U) << q;
      if ((img >> q) > (best >> q)) {
        abandon = true;
        break;
      }
    }
    if (!abandon && img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Graph::from_words(m, {best});
}

}  // namespace specgraph
