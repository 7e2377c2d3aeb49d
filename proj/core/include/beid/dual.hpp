#pragma once

// Dual graph of the binomial edge ideal of an unmixed graph: one node per cut
// set, with an edge between two minimal primes exactly when the height of
// their sum exceeds the common height by one.  For unmixed inputs that height
// condition collapses to a purely graph-theoretic test on the two cut sets,
// which is what this module implements; the raw height definition lives in
// the oracle module.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "beid/cutsets.hpp"
#include "beid/graph.hpp"

namespace beid {

struct DualGraph {
  std::vector<VertexSet> nodes;           // = cut-set family, canonical order
  std::vector<std::pair<int, int>> edges; // node index pairs, i < j, sorted
  std::vector<std::vector<int>> adj;      // adjacency lists over node indices
  int n = 0;       // vertex count of the underlying graph
  int height = 0;  // ht(J_G) = n - c({})
};

// Edge test for two distinct cut sets s, t of an unmixed graph.  With |t|
// at least |s| (swapped internally):
//   - |t - s| >  1: never an edge;
//   - |t - s| == 1 and s is contained in t: always an edge;
//   - t - s = {x} and s not contained in t (so |s| = |t|): an edge exactly
//     when x is not a cut vertex of the subgraph induced on V - s.
// The first overload enumerates the family to validate its preconditions and
// throws std::invalid_argument when g is not unmixed or s, t are not distinct
// cut sets.  The second trusts `fam` (as validated by build_dual) and only
// checks membership.
bool dual_edge(const Graph& g, VertexSet s, VertexSet t);
bool dual_edge(const Graph& g, VertexSet s, VertexSet t, const CutSetFamily& fam);

// Builds the whole dual graph.  Refuses non-unmixed input (the edge criterion
// is only valid under unmixedness) with std::invalid_argument naming the
// violating cut set.  The family overload skips enumeration and instead
// verifies that every handed set is a cut set with c(S) = |S| + c({}); it is
// the entry point for family graphs whose cut sets come from a closed-form
// predictor.
DualGraph build_dual(const Graph& g);
DualGraph build_dual(const Graph& g, const CutSetFamily& fam);

bool is_connected(const DualGraph& d);

// Exact diameter; nullopt when the dual is disconnected.  All-pairs BFS for
// small node counts, iterative fringe-upper-bound search above that.
std::optional<int> diameter(const DualGraph& d);

// True iff diameter(D(J_G)) <= ht(J_G).  Preconditions are reported
// distinctly: non-unmixed input and a disconnected dual each raise
// std::invalid_argument with their own message.
bool hirsch_check(const Graph& g);
bool hirsch_check(const DualGraph& d);

// Graphviz rendering with nodes labelled like the prime they stand for:
// "P_∅", "P_{2,6}".
std::string dual_to_dot(const DualGraph& d);

// {"nodes": [[...], ...], "edges": [[i,j], ...], "connected": bool,
//  "diameter": int|null, "hirsch": bool|null}
nlohmann::json dual_to_json(const DualGraph& d);

}  // namespace beid
