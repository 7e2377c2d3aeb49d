#include "beid/graph6.hpp"

#include <stdexcept>

namespace beid {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw std::invalid_argument("graph6: " + what + " at offset " +
                              std::to_string(offset));
}
}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // Long form: '~' then 18 bits of n, big-endian in 6-bit groups.
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  // Tolerate one trailing newline, as produced by generators writing one
  // graph per line.
  if (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) fail(0, "empty input");

  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (text.size() - pos < k) fail(text.size(), "truncated input");
  };
  auto byte = [&]() -> int {
    int b = static_cast<unsigned char>(text[pos]);
    if (b < 63 || b > 126) fail(pos, "byte outside the printable range 63..126");
    ++pos;
    return b - 63;
  };

  long n;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = byte();
  } else {
    ++pos;
    need(1);
    if (static_cast<unsigned char>(text[pos]) == 126)
      fail(pos, "vertex counts above 258047 are not supported");
    need(3);
    n = byte();
    n = (n << 6) | byte();
    n = (n << 6) | byte();
  }
  if (n < 1 || n > 64) fail(0, "vertex count " + std::to_string(n) + " outside 1..64");

  const long bit_total = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  int acc = 0, nbits = 0;
  for (int j = 2, i = 1; static_cast<long>((j - 1) * (j - 2) / 2 + i) <= bit_total;) {
    if (nbits == 0) {
      need(1);
      acc = byte();
      nbits = 6;
    }
    if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
    --nbits;
    if (++i == j) { ++j; i = 1; }
  }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    fail(pos - 1, "nonzero padding bits");
  if (pos != text.size()) fail(pos, "trailing bytes after the edge bits");
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace beid
