#pragma once

// Builders for the block families and gluing operations, their closed-form
// cut-set predictors, and a small expression DSL for compositions.
//
// The two gluing operations on graphs with a chosen leaf f_i (neighbour v_i):
//   star:  identify f_1 with f_2 (the identified vertex gets degree 2);
//   circ:  delete f_1 and f_2 and identify v_1 with v_2, which requires
//          deg(v_1) >= 3 and deg(v_2) >= 3 (with both degrees equal to 2 the
//          result coincides with a star of the leaf-stripped factors, and a
//          2-vs->=3 mix destroys unmixedness, so both are rejected).

#include <string>
#include <vector>

#include "beid/cutsets.hpp"
#include "beid/graph.hpp"

namespace beid {

// Result of a gluing: the graph plus the label maps from each factor.
// mapK[v-1] is the label hosting vertex v of factor K, or 0 when the vertex
// was deleted by the operation.  Factors keep their relative label order and
// the identified vertex takes the smaller (first-factor) label.
struct GluedGraph {
  Graph graph;
  std::vector<int> map1, map2;
};

// The staircase block on 2m vertices: edges {2i, 2j-1} for 1 <= i <= j <= m.
// Bipartite with the odd labels on one side, leaves exactly {1, 2m}.
Graph make_F(int m);

GluedGraph star_glue(const Graph& g1, int f1, const Graph& g2, int f2);
GluedGraph circ_glue(const Graph& g1, int f1, const Graph& g2, int f2);

// Apex construction over a bipartite graph with equal sides: a new vertex
// v = n+1 joined to all of bip.side1 and to a new leaf f = n+2.  The one-
// argument overload derives the bipartition itself.
Graph semicone(const Graph& h, const Bipartition& bip);
Graph semicone(const Graph& h);

// K_n with a fan added on each list in `fan_sets` (pairwise disjoint, listed
// in prefix order): for the i-th prefix {w_1,...,w_l} of a list, one new
// private vertex joined to w_1..w_l.  This is the minimal choice of attached
// clique sizes; the cut sets do not depend on that choice.
Graph fan_graph(int n, const std::vector<std::vector<int>>& fan_sets);

// The staircase-with-antennas families on 2k (square) or 2k-1 vertices,
// defined for k >= 4; unmixed but with disconnected dual.  Square:
//   {1,2}, {2k-1,2k}, and {2i,2j-1} for i=1..k-1, j=2..k.
// Offset (square=false):
//   {1,2}, {2k-2,2k-1}, and {2i,2j-1} for i=1..k-1, j=2..k-1.
Graph make_M(int k, bool square);

// Expression tree for block compositions.  Star and Circ operands associate
// left to right; Circ binds tighter than Star.  Fan atoms have no text
// grammar and exist for programmatic use only.
struct BlockExpr {
  enum class Kind { F, Fan, Star, Circ };
  Kind kind = Kind::F;
  int m = 0;                   // F
  int fan_n = 0;               // Fan: K_n ...
  std::vector<int> fan_sizes;  // ... with fans on consecutive prefix lists
  std::vector<BlockExpr> operands;  // Star / Circ, two or more

  static BlockExpr f(int m);
  static BlockExpr fan(int n, std::vector<int> sizes);
  static BlockExpr star(std::vector<BlockExpr> ops);
  static BlockExpr circ(std::vector<BlockExpr> ops);

  // DSL syntax ("F3 o F4 * F1"); fans render as "fan(n;s1,...)" which the
  // parser does not accept.
  std::string to_string() const;
};

// Grammar:  expr := chain ('*' chain)* ; chain := atom ('o' atom)* ;
//           atom := 'F' INT | '(' expr ')'.  Whitespace-insensitive.
// Throws std::invalid_argument with the offending position.
BlockExpr parse_expr(const std::string& text);

// Rewrites an expression into its normal form: nested stars and circs are
// flattened, and an F_2 at either end of a circ chain is replaced by a
// starred F_1 (the two spellings build the same labelled graph).  A chain
// with at least two factors must not contain F_1; that throws.  Interior F_2
// factors are kept -- elaborate() builds them with a warning.
BlockExpr normalize_expr(const BlockExpr& expr);

struct Elaboration {
  Graph graph;
  // One note per interior F_2 factor: its junction vertices have degree 2,
  // so the gluing runs without the degree requirement and the result is
  // typically not unmixed.
  std::vector<std::string> warnings;
};
Elaboration elaborate(const BlockExpr& expr);

// Closed-form cut-set families, expanded recursively and returned in
// canonical order with component counts read off the built graph.  Throws
// std::invalid_argument when no closed form applies (interior F_2 factors,
// fans inside compositions, missing degree-2 junction witnesses).
CutSetFamily predict_cutsets(const BlockExpr& expr);

// M(F_1) = {{}};  M(F_m) = {{}} u {{2,4,...,2i} : i < m}
//                        u {{2m-1} u S : S in M(F_{m-1})}.
CutSetFamily predict_cutsets_F(int m);

// Unions T_1 u ... u T_k of one prefix (or nothing) per fan list, except the
// union that covers all of [n].
CutSetFamily predict_cutsets_fan(int n, const std::vector<std::vector<int>>& fan_sets);

// M(G) = {{}, V_1} u {S u {v} : S in M(H)} u {T in M(H) : T proper subset
// of V_1} for the semicone over H.  Valid when H is unmixed and the
// neighbours of its two leaves are adjacent; throws otherwise (callers fall
// back to enumeration).
CutSetFamily predict_cutsets_semicone(const Graph& h, const Bipartition& bip);

}  // namespace beid
