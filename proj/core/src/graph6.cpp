#include "caystab/graph6.hpp"

#include <cstddef>

#include "caystab/errors.hpp"

namespace caystab {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShort = 62;
constexpr long long kMaxLong = 258047; // largest n in the 4-byte form

int decode_byte(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw ParseError("graph6 byte outside printable range");
  return v;
}

} // namespace

ColoredGraph graph6_read(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string");
  std::size_t pos = 0;
  long long n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6 8-byte vertex counts are not supported");
    if (text.size() < 4) throw ParseError("truncated graph6 vertex count");
    n = 0;
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | decode_byte(text[pos]);
    if (n <= kMaxShort) throw ParseError("non-canonical graph6 vertex count");
  } else {
    n = decode_byte(text[0]);
    pos = 1;
  }
  if (n < 1) throw ParseError("graph6 graph needs at least one vertex");
  if (n > 2000) throw ParseError("graph6 vertex count beyond supported size");

  const long long bit_count = n * (n - 1) / 2;
  const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - pos != byte_count)
    throw ParseError("graph6 body length does not match vertex count");

  std::vector<ColoredEdge> edges;
  long long bit = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = decode_byte(text[pos + bit / 6]);
      if (current & (1 << (5 - bit % 6))) edges.push_back({i, j, 0});
    }
  }
  // padding bits must be zero
  for (; bit % 6 != 0; ++bit)
    if (current & (1 << (5 - bit % 6)))
      throw ParseError("graph6 padding bits must be zero");

  return ColoredGraph(static_cast<int>(n), std::move(edges));
}

std::string graph6_write(const ColoredGraph& g) {
  if (!g.is_simple())
    throw UnsupportedFeatureError(
        "graph6 output requires a simple graph (no loops, single color)");
  const long long n = g.vertex_count();
  if (n > kMaxLong)
    throw UnsupportedFeatureError("graph too large for the 4-byte graph6 form");

  std::string out;
  if (n <= kMaxShort) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }

  int current = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kBias));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((current << (6 - filled)) + kBias));
  return out;
}

} // namespace caystab
