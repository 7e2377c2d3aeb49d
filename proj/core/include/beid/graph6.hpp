#pragma once

// graph6 text encoding (Brendan McKay's format): N(n) followed by the upper
// triangle of the adjacency matrix in column order, packed 6 bits per
// printable byte (value + 63).  Only the graph6 variant is supported, for
// 1 <= n <= 64; the optional ">>graph6<<" header is accepted on input.

#include <string>
#include <string_view>

#include "beid/graph.hpp"

namespace beid {

std::string graph6_encode(const Graph& g);

// Strict decoder: rejects malformed bytes, nonzero padding bits, trailing
// garbage, and vertex counts outside 1..64.  Throws std::invalid_argument
// with an offset-bearing message.
Graph graph6_decode(std::string_view text);

}  // namespace beid
