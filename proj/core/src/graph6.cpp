#include "specgraph/graph6.hpp"

#include <string>
#include <vector>

#include "specgraph/error.hpp"

namespace specgraph {
namespace {

constexpr int kBias = 63;

int sextet(char c, std::size_t pos) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte < 63 || byte > 126) {
    throw Error(Errc::invalid_char,
                "byte " + std::to_string(byte) + " at offset " + std::to_string(pos));
  }
  return byte - kBias;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::truncated_payload, "empty graph6 string");

  std::size_t pos = 0;
  std::size_t order = 0;
  const int first = sextet(text[0], 0);
  if (first < 63) {
    order = static_cast<std::size_t>(first);
    pos = 1;
  } else {
    // 126 followed by three sextets (18 bits); 126 126 + six sextets is beyond our bound.
    if (text.size() < 4) throw Error(Errc::truncated_payload, "short size field");
    if (sextet(text[1], 1) == 63) {
      throw Error(Errc::invalid_char, "8-byte size form exceeds the supported order");
    }
    for (std::size_t i = 1; i <= 3; ++i) order = (order << 6) | static_cast<std::size_t>(sextet(text[i], i));
    pos = 4;
  }
  if (order == 0) throw Error(Errc::truncated_payload, "graph6 order 0 is not a graph");
  if (order > kGraph6MaxOrder) throw Error(Errc::invalid_char, "order exceeds graph6 4-byte form");

  const std::size_t pairs = Graph::pair_count(order);
  const std::size_t payload = (pairs + 5) / 6;
  if (text.size() - pos < payload) {
    throw Error(Errc::truncated_payload, "expected " + std::to_string(payload) +
                                             " payload bytes, got " + std::to_string(text.size() - pos));
  }
  if (text.size() - pos > payload) {
    throw Error(Errc::invalid_char, "trailing bytes after payload");
  }

  std::vector<Graph::Word> words((pairs + Graph::kWordBits - 1) / Graph::kWordBits, 0);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < payload; ++i) {
    const int s = sextet(text[pos + i], pos + i);
    for (int k = 5; k >= 0; --k, ++bit) {
      if (((s >> k) & 1) == 0) continue;
      if (bit >= pairs) throw Error(Errc::nonzero_padding, "padding bits must be zero");
      words[bit / Graph::kWordBits] |= Graph::Word{1} << (bit % Graph::kWordBits);
    }
  }
  return Graph::from_words(order, std::move(words));
}

std::string encode_graph6(const Graph& g) {
  const std::size_t order = g.order();
  if (order > kGraph6MaxOrder) throw Error(Errc::invalid_params, "order exceeds graph6 4-byte form");
  std::string out;
  const std::size_t pairs = Graph::pair_count(order);
  out.reserve(4 + (pairs + 5) / 6);
  if (order <= 62) {
    out.push_back(static_cast<char>(order + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((order >> shift) & 0x3F) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    acc = (acc << 1) | (g.pair_bit(p) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + kBias));
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace specgraph
