#pragma once

// Exact canonical labelling for graphs up to 64 vertices: iterated color
// refinement, then backtracking over every refinement-stable labelling,
// keeping the lexicographically largest adjacency encoding.  Exhaustive over
// the search tree, so two graphs share a canonical form iff they are
// isomorphic; the refinement only prunes, never decides.

#include <string>
#include <vector>

#include "beid/graph.hpp"

namespace beid {

// Canonical byte string: "<n>:" followed by the packed upper triangle of the
// canonically relabelled adjacency matrix.
std::string canonical_form(const Graph& g);

// One canonical labelling: perm[v-1] is the position (1-based) vertex v takes
// in the canonical graph.
std::vector<int> canonical_labelling(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Relabels g by perm (old label v -> new label perm[v-1]); perm must be a
// permutation of 1..n.
Graph permute(const Graph& g, const std::vector<int>& perm);

}  // namespace beid
