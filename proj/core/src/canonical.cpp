#include "beid/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace beid {

namespace {

// Backtracking search over refinement-stable labellings.  Every discrete
// coloring reachable through (invariant) refinement and cell individualization
// is visited, and the largest adjacency encoding wins, so the result depends
// only on the isomorphism class.
struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_perm;  // vertex v (1-based) -> canonical position
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {}

  // Color refinement: repeatedly split color classes by the multiset of
  // neighbor colors.  New color ids are assigned in signature order, which
  // keeps the ordered partition isomorphism-invariant and makes the
  // refinement a fixpoint once the class count stops growing.
  void refine(std::vector<int>& color) const {
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    for (;;) {
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v = 0; v < n; ++v) {
        std::vector<int> sig;
        sig.reserve(static_cast<std::size_t>(g.degree(v + 1)) + 1);
        sig.push_back(color[v]);
        for (int u : g.neighbors(v + 1)) sig.push_back(color[u - 1]);
        std::sort(sig.begin() + 1, sig.end());
        groups[std::move(sig)].push_back(v);
      }
      if (static_cast<int>(groups.size()) == classes) return;
      classes = static_cast<int>(groups.size());
      int id = 0;
      for (const auto& [sig, members] : groups) {
        for (int v : members) color[v] = id;
        ++id;
      }
    }
  }

  void search(std::vector<int> color) {
    refine(color);
    std::vector<int> cell_size(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) ++cell_size[color[v]];
    int target = -1;
    for (int c = 0; c <= n && target < 0; ++c)
      if (cell_size[c] > 1) target = c;
    if (target < 0) {
      consider(color);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child = color;
      child[v] = n;  // fresh color, sorts after all existing ids
      search(std::move(child));
    }
  }

  void consider(const std::vector<int>& color) {
    // Discrete coloring: color ids are exactly 0..n-1.
    std::vector<int> at(static_cast<std::size_t>(n));  // position -> vertex (0-based)
    for (int v = 0; v < n; ++v) at[color[v]] = v;
    std::string enc((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        if (g.adjacent(at[i] + 1, at[j] + 1))
          enc[static_cast<std::size_t>(bit) / 8] |= static_cast<char>(0x80 >> (bit % 8));
        ++bit;
      }
    if (!have_best || enc > best) {
      best = enc;
      best_perm.assign(static_cast<std::size_t>(n), 0);
      for (int v = 0; v < n; ++v) best_perm[v] = color[v] + 1;
      have_best = true;
    }
  }
};

}  // namespace

std::vector<int> canonical_labelling(const Graph& g) {
  if (g.n() == 0) return {};
  CanonSearch s(g);
  s.search(std::vector<int>(static_cast<std::size_t>(g.n()), 0));
  return s.best_perm;
}

std::string canonical_form(const Graph& g) {
  if (g.n() == 0) return "0:";
  CanonSearch s(g);
  s.search(std::vector<int>(static_cast<std::size_t>(g.n()), 0));
  return std::to_string(g.n()) + ":" + s.best;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permute: wrong permutation length");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list())
    edges.emplace_back(perm[static_cast<std::size_t>(u) - 1],
                       perm[static_cast<std::size_t>(v) - 1]);
  return Graph::from_edges(g.n(), edges);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 1; v <= a.n(); ++v) da.push_back(a.degree(v));
  for (int v = 1; v <= b.n(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace beid
