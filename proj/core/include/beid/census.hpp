#pragma once

// Exhaustive catalogue of small graphs up to isomorphism and the survey rows
// the census emits.  Graphs on n vertices are generated by extending every
// (n-1)-vertex graph with one new vertex over all attachment subsets, with
// canonical-form rejection; deleting any vertex of any n-vertex graph lands
// back in the previous level, so every isomorphism class is reached.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "beid/graph.hpp"

namespace beid {

// One survey row.  For connected bipartite graphs, dual_connected,
// unmixed && peeling, and certified report the same fact through three
// independent routes (dual-edge criterion, cut-set heights, and the purely
// structural block decomposition); the census records all three so a
// divergence shows up as data.
struct CensusRow {
  int n = 0;
  std::string graph6;
  bool bipartite = false;
  bool unmixed = false;
  bool dual_connected = false;
  bool peeling = false;
  bool certified = false;
  std::optional<int> diameter;  // dual-graph diameter; empty when disconnected
  bool hirsch_ok = false;       // diameter <= ideal height; false when undefined
};

// Levels 1..max_n of the catalogue: levels[k-1] holds one representative per
// isomorphism class of graphs on exactly k vertices (disconnected ones
// included), in a deterministic generation order.  bipartite_only prunes to
// bipartite classes at every level.  Guarded at max_n <= 8 (<= 10 with
// bipartite_only); BEID_GUARD_N raises the ceiling.
std::vector<std::vector<Graph>> graph_levels(int max_n, bool bipartite_only);

// Final level of graph_levels(n, bipartite_only).
std::vector<Graph> all_graphs(int n, bool bipartite_only);
// Connected members of all_graphs(n, bipartite_only), generation order.
std::vector<Graph> connected_graphs(int n, bool bipartite_only);

// Surveys one graph.  Certification is attempted only for connected
// bipartite inputs; the dual graph is built only when the graph is unmixed
// (otherwise it is disconnected by definition and the diameter is undefined).
CensusRow census_row(const Graph& g);

// Surveys every connected graph with 1 <= n <= max_n, in generation order.
// `violations` (when non-null) collects a description of every graph whose
// row breaks an invariant the theory predicts:
//   - connected bipartite: dual_connected, unmixed && peeling, and certified
//     must agree;
//   - connected bipartite unmixed with n >= 2: exactly two leaves;
//   - certified: the certificate must rebuild the graph exactly, and the
//     dual diameter must stay within the ideal height.
// jobs > 1 surveys rows concurrently; output order does not depend on it.
std::vector<CensusRow> run_census(int max_n, bool bipartite_only, int jobs,
                                  std::vector<std::string>* violations);

// Header line plus one row per graph; diameter prints empty when undefined.
std::string census_to_csv(const std::vector<CensusRow>& rows);
nlohmann::json census_to_json(const std::vector<CensusRow>& rows);

}  // namespace beid
