#pragma once

// Immutable simple graphs on vertices 1..n with n <= 64, plus the induced
// subgraph / component / bipartition primitives the rest of the library is
// built on.  Vertex sets are single 64-bit words (bit v-1 <=> vertex v), which
// is what makes exhaustive subset scans over cut-set candidates affordable.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace beid {

// Set of vertex labels drawn from 1..64.  Value type, cheap to copy.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  static constexpr VertexSet of_bits(std::uint64_t bits) { return VertexSet(bits); }
  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }
  // {1, 2, ..., n}
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    std::uint64_t b = 0;
    for (int v : vs) b |= bit(v);
    return VertexSet(b);
  }
  static VertexSet of_vector(const std::vector<int>& vs) {
    std::uint64_t b = 0;
    for (int v : vs) b |= bit(v);
    return VertexSet(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
  // Smallest member; undefined on the empty set.
  int min() const { return __builtin_ctzll(bits_) + 1; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  // Iterates members in increasing order.
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return __builtin_ctzll(rest_) + 1; }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }
  // "{2,4,6}" / "{}"
  std::string to_string() const;

 private:
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr std::uint64_t bit(int v) { return 1ULL << (v - 1); }
  std::uint64_t bits_ = 0;
};

// Orders sets by cardinality, then lexicographically on the increasing member
// sequence ({2,6} before {3,5}).  This is the canonical order used for cut-set
// families and dual-graph node lists.
bool set_order_less(VertexSet a, VertexSet b);

// Simple undirected graph, immutable after construction.  Adjacency is stored
// as one VertexSet per vertex, so neighborhood queries are single-word ops.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on out-of-range labels, self-loops, or n > 64.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return adj_[v - 1]; }
  bool adjacent(int u, int v) const { return adj_[u - 1].contains(v); }
  int degree(int v) const { return adj_[v - 1].size(); }

  int edge_count() const;
  // Edges {u,v} with u < v, ordered by (u, v).
  std::vector<std::pair<int, int>> edge_list() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

struct Bipartition {
  VertexSet side1;  // contains the smallest vertex of each component
  VertexSet side2;
};

// Subgraph induced on `keep`, relabelled to 1..|keep| preserving label order.
// If `labels` is non-null it receives the map back: (*labels)[i-1] is the
// original label of result vertex i.
Graph induced_subgraph(const Graph& g, VertexSet keep,
                       std::vector<int>* labels = nullptr);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
// Components of the subgraph induced on `sub`, expressed in g's labels.
std::vector<VertexSet> components_within(const Graph& g, VertexSet sub);
int component_count_within(const Graph& g, VertexSet sub);

// c_G(S): number of connected components of the subgraph induced on V(g) - s.
// c(g, {}) is the component count of g itself.
int c(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

// Vertices of degree exactly 1.
VertexSet leaves(const Graph& g);
// Union of the neighborhoods of the members of x (may intersect x).
VertexSet neighbors(const Graph& g, VertexSet x);

// Vertices lying in exactly one maximal clique, i.e. whose neighborhood is a
// clique.  Such vertices never occur in a cut set.
VertexSet free_vertices(const Graph& g);

// 2-coloring with the smallest vertex of every component on side1, or nullopt
// if some cycle is odd.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// True iff deleting t increases the component count of the subgraph induced on
// V(g) - s, i.e. t is a cut vertex of that subgraph.  Throws
// std::invalid_argument if t is in s or out of range.
bool is_cut_vertex_in_induced(const Graph& g, VertexSet s, int t);

// Graphviz rendering with plain numeric vertex labels.
std::string to_dot(const Graph& g);

}  // namespace beid
