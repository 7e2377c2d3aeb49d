#include "beid/graph.hpp"

#include <stdexcept>

namespace beid {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

bool set_order_less(VertexSet a, VertexSet b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  std::uint64_t d = a.bits() ^ b.bits();
  if (d == 0) return false;
  // The first point of difference between the two increasing sequences is the
  // smallest element of the symmetric difference; whichever set holds it
  // comes first.
  return (a.bits() & (d & -d)) != 0;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > 64) throw std::invalid_argument("vertex count must be in 0..64");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), VertexSet());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge endpoint out of range: {" +
                                  std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u - 1] = g.adj_[u - 1].with(v);
    g.adj_[v - 1] = g.adj_[v - 1].with(u);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const VertexSet& nb : adj_) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u - 1])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.adj_ == b.adj_;
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* labels) {
  if (!keep.subset_of(g.vertices()))
    throw std::invalid_argument("induced_subgraph: vertex outside the graph");
  std::vector<int> map = keep.to_vector();
  int new_label[65] = {0};
  for (std::size_t i = 0; i < map.size(); ++i) new_label[map[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> edges;
  for (int u : keep)
    for (int v : g.neighbors(u) & keep)
      if (u < v) edges.emplace_back(new_label[u], new_label[v]);
  if (labels) *labels = std::move(map);
  return Graph::from_edges(keep.size(), edges);
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet sub) {
  std::vector<VertexSet> blocks;
  VertexSet seen;
  for (int v : sub) {
    if (seen.contains(v)) continue;
    // Frontier expansion: each round adds the whole unvisited neighborhood.
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier) next = next | g.neighbors(u);
      frontier = (next & sub) - comp;
      comp = comp | frontier;
    }
    blocks.push_back(comp);
    seen = seen | comp;
  }
  return blocks;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

int component_count_within(const Graph& g, VertexSet sub) {
  int count = 0;
  VertexSet seen;
  for (int v : sub) {
    if (seen.contains(v)) continue;
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier) next = next | g.neighbors(u);
      frontier = (next & sub) - comp;
      comp = comp | frontier;
    }
    seen = seen | comp;
    ++count;
  }
  return count;
}

int c(const Graph& g, VertexSet s) {
  return component_count_within(g, g.vertices() - s);
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return component_count_within(g, g.vertices()) == 1;
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) == 1) out = out.with(v);
  return out;
}

VertexSet neighbors(const Graph& g, VertexSet x) {
  VertexSet out;
  for (int v : x) out = out | g.neighbors(v);
  return out;
}

VertexSet free_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 1; v <= g.n(); ++v) {
    VertexSet nb = g.neighbors(v);
    bool clique = true;
    for (int u : nb)
      if (!((nb - g.neighbors(u)).without(u)).empty()) { clique = false; break; }
    if (clique) out = out.with(v);
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  VertexSet side1, side2, seen;
  for (int s = 1; s <= g.n(); ++s) {
    if (seen.contains(s)) continue;
    // 2-color this component by BFS layers starting from its smallest vertex.
    VertexSet a = VertexSet::single(s), b;
    VertexSet frontier = a;
    bool to_b = true;
    VertexSet comp = a;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier) next = next | g.neighbors(u);
      frontier = next - comp;
      comp = comp | frontier;
      (to_b ? b : a) = (to_b ? b : a) | frontier;
      to_b = !to_b;
    }
    seen = seen | comp;
    side1 = side1 | a;
    side2 = side2 | b;
  }
  // Layered BFS can miscolor only if an edge joins two vertices of one side.
  for (int u = 1; u <= g.n(); ++u) {
    VertexSet nb = g.neighbors(u);
    VertexSet own = side1.contains(u) ? side1 : side2;
    if (nb.intersects(own)) return std::nullopt;
  }
  return Bipartition{side1, side2};
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_cut_vertex_in_induced(const Graph& g, VertexSet s, int t) {
  if (t < 1 || t > g.n())
    throw std::invalid_argument("is_cut_vertex_in_induced: vertex out of range");
  if (s.contains(t))
    throw std::invalid_argument("is_cut_vertex_in_induced: t lies in s");
  return c(g, s.with(t)) > c(g, s);
}

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int v = 1; v <= g.n(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edge_list())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace beid
