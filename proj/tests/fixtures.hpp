#pragma once

// Shared fixture graphs and small helpers for the test suites.

#include <random>
#include <string>
#include <vector>

#include "beid/cutsets.hpp"
#include "beid/graph.hpp"

namespace fixtures {

inline beid::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return beid::Graph::from_edges(n, e);
}

inline beid::Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(n, 1);
  return beid::Graph::from_edges(n, e);
}

inline beid::Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return beid::Graph::from_edges(n, e);
}

// K_{1,n-1} with the hub at vertex 1.
inline beid::Graph claw(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 2; v <= n; ++v) e.emplace_back(1, v);
  return beid::Graph::from_edges(n, e);
}

// 8-vertex non-bipartite graph whose binomial edge ideal is unmixed with a
// connected dual graph yet is not Cohen-Macaulay: the one-way street of the
// non-bipartite world.
inline beid::Graph dual_connected_not_cm() {
  return beid::Graph::from_edges(8, {{1, 2},
                                     {2, 3},
                                     {3, 4},
                                     {4, 5},
                                     {2, 5},
                                     {5, 6},
                                     {3, 7},
                                     {4, 7},
                                     {3, 8},
                                     {4, 8}});
}

// 5-vertex 2-connected graph: unmixed, cut sets {∅, {1,2}}, dual graph two
// isolated nodes.
inline beid::Graph two_connected_unmixed() {
  return beid::Graph::from_edges(
      5, {{1, 2}, {2, 4}, {1, 4}, {1, 3}, {2, 3}, {2, 5}, {1, 5}});
}

// 12-vertex bipartite graph: unmixed, exactly two cut vertices (2 and 11)
// which are NOT adjacent, hence not Cohen-Macaulay; its semicone is mixed.
inline beid::Graph nonadjacent_cut_vertices() {
  return beid::Graph::from_edges(12, {{1, 2},
                                      {2, 3},
                                      {3, 4},
                                      {4, 5},
                                      {5, 6},
                                      {6, 7},
                                      {7, 8},
                                      {8, 9},
                                      {9, 10},
                                      {10, 11},
                                      {11, 12},
                                      {2, 5},
                                      {3, 6},
                                      {3, 8},
                                      {8, 11},
                                      {5, 8},
                                      {5, 10},
                                      {7, 10},
                                      {3, 10}});
}

// Deterministic G(n, p)-style graph for property tests.
inline beid::Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return beid::Graph::from_edges(n, e);
}

inline std::string family_to_string(const beid::CutSetFamily& fam) {
  std::string out;
  for (const beid::VertexSet& s : fam.all) out += s.to_string() + " ";
  return out;
}

}  // namespace fixtures
