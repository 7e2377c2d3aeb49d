#pragma once

// Cut-set enumeration and the minimal-prime combinatorics built on it.  A set
// S is a cut set of G when S is empty or removing any single member of S
// strictly lowers the component count of the complement-induced subgraph:
//   c(S - {i}) < c(S) for every i in S.
// Each cut set S stands for a minimal prime of the binomial edge ideal of G,
// of height n + |S| - c(S).

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "beid/graph.hpp"

namespace beid {

// A cut set together with the component partition of the subgraph it leaves
// behind.  Combinatorial stand-in for the prime P_S: the blocks are the
// complete graphs the prime is built from, and height = n + |S| - #blocks.
struct MinimalPrime {
  VertexSet cutset;
  std::vector<VertexSet> blocks;  // components of G - S, by smallest vertex
  int height = 0;
};

// All cut sets of a graph, sorted by cardinality then lexicographically, with
// the matching component counts.  The empty set is always present (its c-value
// is the component count of the whole graph) and comes first.
struct CutSetFamily {
  std::vector<VertexSet> all;
  std::vector<int> cvals;

  // Index of s in `all`, or -1 when s is not a member.
  int index_of(VertexSet s) const;
  bool contains(VertexSet s) const { return index_of(s) >= 0; }
  std::size_t size() const { return all.size(); }
};

// Membership test straight from the definition.  Throws std::invalid_argument
// if s contains labels outside 1..n.
bool is_cut_set(const Graph& g, VertexSet s);

// Enumerates every cut set.  Only non-free vertices can occur in a cut set, so
// the scan runs over subsets of those; with k non-free vertices the cost is
// 2^k component counts.  Guarded (BEID_GUARD_N overridable) at k <= 24; use
// the closed-form predictors in constructions.hpp for larger family graphs.
CutSetFamily enumerate_cut_sets(const Graph& g);

// One MinimalPrime per cut set, in family order.
std::vector<MinimalPrime> minimal_primes(const Graph& g);

// ht(J_G): the minimum height over all minimal primes.  n - c({}) when the
// graph is unmixed, but computed as the true minimum so mixed inputs report
// honestly.
int ideal_height(const Graph& g);
int ideal_height(const Graph& g, const CutSetFamily& fam);

// Unmixedness: every minimal prime has the same height, equivalently
// c(S) = |S| + c({}) for every cut set S.  On failure `witness` is the first
// violating cut set in family order and `witness_c` its component count.
// The family overloads judge the family they are handed, so they also work
// with predicted families too large to enumerate.
struct UnmixedReport {
  bool unmixed = false;
  VertexSet witness;
  int witness_c = 0;
};
UnmixedReport is_unmixed(const Graph& g);
UnmixedReport is_unmixed(const CutSetFamily& fam);

// Peeling property: every non-empty cut set S contains a member s with
// S - {s} again a cut set.  On failure `witness` is the first stuck set.
struct PeelingReport {
  bool holds = false;
  VertexSet witness;
};
PeelingReport peeling_holds(const Graph& g);
PeelingReport peeling_holds(const CutSetFamily& fam);

// dim(R/J_G) = |V(G)| + #components, defined for unmixed graphs only; throws
// std::invalid_argument otherwise.
int dimension(const Graph& g);

// {"n": ..., "cutsets": [{"S": [...], "c": ..., "height": ...}, ...]}
nlohmann::json cutsets_to_json(const Graph& g, const CutSetFamily& fam);

}  // namespace beid
