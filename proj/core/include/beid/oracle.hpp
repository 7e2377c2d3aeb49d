#pragma once

// Independent ground truth for the combinatorial machinery.  Everything here
// recomputes from first principles — subset scans with fresh breadth-first
// searches over plain adjacency lists — and deliberately shares no traversal
// code with the bitset-based engine it cross-checks.
//
// The height oracle rests on a dimension count for the intersection of the
// two rank-one varieties behind a pair of minimal primes: a point assigns
// each surviving vertex a column vector, columns inside one block of either
// component partition must be proportional, and stratifying by the set W of
// nonzero columns gives
//   dim = max over W of  sum over components C of H_W  (|C| + 1),
// where H_W links two members of W lying in a common block on either side.
// ht(P_S + P_T) = 2n - dim.  This derivation is scaffolding, not a quoted
// result; its forced self-check is that the case T = S must reproduce the
// height formula n + |S| - c(S), which the test suite verifies before the
// oracle is trusted as a referee.

#include "beid/cutsets.hpp"
#include "beid/graph.hpp"

namespace beid {

struct HeightReport {
  VertexSet s, t;
  int ht_s = 0;
  int ht_t = 0;
  int ht_sum = 0;
  bool edge_by_definition = false;  // ht_sum - 1 == ht_s == ht_t == ht(J_G)
};

// Definition-verbatim scan of all 2^n subsets.  Guarded at n <= 12.
CutSetFamily oracle_cut_sets(const Graph& g);

// ht(P_S + P_T) via the stratified dimension count above.  Guarded at
// n <= 10; throws std::invalid_argument when s or t is not a cut set.
int oracle_height_sum(const Graph& g, VertexSet s, VertexSet t);

// Raw dual-graph edge definition.  The report overload takes ht(J_G) so
// exhaustive sweeps can compute it once per graph; the plain overload derives
// it from a fresh subset scan.
HeightReport oracle_height_report(const Graph& g, VertexSet s, VertexSet t,
                                  int ideal_height);
bool oracle_dual_edge(const Graph& g, VertexSet s, VertexSet t);

}  // namespace beid
