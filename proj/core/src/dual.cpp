#include "beid/dual.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace beid {

namespace {

// Edge criterion with all preconditions already established.  Distinct cut
// sets of an unmixed graph; ties in size keep the argument order (the two
// possible cut-vertex tests agree under unmixedness).
bool edge_criterion(const Graph& g, VertexSet s, VertexSet t) {
  if (t.size() < s.size()) std::swap(s, t);
  const VertexSet d = t - s;
  if (d.size() != 1) return false;  // |t - s| >= 2: heights drift apart
  if (s.subset_of(t)) return true;  // nested, one element apart
  // Same size, one element swapped: edge iff the swapped-in element does not
  // disconnect anything once s is removed.
  return !is_cut_vertex_in_induced(g, s, d.min());
}

void require_member(const CutSetFamily& fam, VertexSet s, const char* who) {
  if (!fam.contains(s))
    throw std::invalid_argument(std::string(who) + ": " + s.to_string() +
                                " is not a cut set of the graph");
}

void require_unmixed(const CutSetFamily& fam, const char* who) {
  const UnmixedReport u = is_unmixed(fam);
  if (!u.unmixed)
    throw std::invalid_argument(std::string(who) +
                                ": graph is not unmixed (cut set " +
                                u.witness.to_string() + " has c=" +
                                std::to_string(u.witness_c) + ")");
}

DualGraph assemble(const Graph& g, const CutSetFamily& fam) {
  DualGraph d;
  d.nodes = fam.all;
  d.n = g.n();
  d.height = g.n() - (fam.cvals.empty() ? 1 : fam.cvals[0]);

  const int nn = static_cast<int>(d.nodes.size());
  if (nn <= 2048) {
    for (int i = 0; i < nn; ++i)
      for (int j = i + 1; j < nn; ++j)
        if (edge_criterion(g, d.nodes[i], d.nodes[j]))
          d.edges.emplace_back(i, j);
  } else {
    // Pairwise scanning is quadratic in the family size; large predicted
    // families instead generate the only possible partners of each node
    // (one element added, or one element swapped) and look them up.
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(fam.size() * 2);
    for (int i = 0; i < nn; ++i) index.emplace(d.nodes[i].bits(), i);
    std::unordered_set<std::uint64_t> seen;
    const VertexSet verts = g.vertices();
    for (int j = 0; j < nn; ++j) {
      const VertexSet t = d.nodes[j];
      for (int x : t) {
        // Nested case: s = t - {x} is always an edge partner if present.
        auto it = index.find(t.without(x).bits());
        if (it != index.end()) d.edges.emplace_back(it->second, j);
        // Swap case: s = t - {x} + {y}; test the criterion once per
        // unordered pair (the lower index drives).
        for (int y : verts - t) {
          auto is = index.find(t.without(x).with(y).bits());
          if (is == index.end() || is->second >= j) continue;
          const std::uint64_t key =
              (static_cast<std::uint64_t>(is->second) << 32) |
              static_cast<std::uint32_t>(j);
          if (!seen.insert(key).second) continue;
          if (edge_criterion(g, d.nodes[is->second], t))
            d.edges.emplace_back(is->second, j);
        }
      }
    }
    std::sort(d.edges.begin(), d.edges.end());
  }

  d.adj.assign(d.nodes.size(), {});
  for (auto [i, j] : d.edges) {
    d.adj[i].push_back(j);
    d.adj[j].push_back(i);
  }
  return d;
}

// BFS from src; fills dist (-1 for unreached) and returns the eccentricity
// within the reached part.
int bfs_dist(const DualGraph& d, int src, std::vector<int>& dist) {
  dist.assign(d.nodes.size(), -1);
  dist[src] = 0;
  std::vector<int> frontier{src};
  int ecc = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (int w : d.adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          ecc = dist[w];
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  return ecc;
}

}  // namespace

bool dual_edge(const Graph& g, VertexSet s, VertexSet t) {
  const CutSetFamily fam = enumerate_cut_sets(g);
  require_unmixed(fam, "dual_edge");
  return dual_edge(g, s, t, fam);
}

bool dual_edge(const Graph& g, VertexSet s, VertexSet t,
               const CutSetFamily& fam) {
  require_member(fam, s, "dual_edge");
  require_member(fam, t, "dual_edge");
  if (s == t)
    throw std::invalid_argument("dual_edge: the two cut sets must differ");
  return edge_criterion(g, s, t);
}

DualGraph build_dual(const Graph& g) {
  const CutSetFamily fam = enumerate_cut_sets(g);
  require_unmixed(fam, "build_dual");
  return assemble(g, fam);
}

DualGraph build_dual(const Graph& g, const CutSetFamily& fam) {
  // The family was handed in (typically by a closed-form predictor), so check
  // what is affordable per set: ordering, the cut-set condition, the declared
  // c-values, and unmixedness.  Completeness is the predictor's contract.
  if (fam.all.empty() || !fam.all[0].empty() ||
      fam.all.size() != fam.cvals.size())
    throw std::invalid_argument(
        "build_dual: family must start with the empty set");
  for (std::size_t i = 1; i < fam.all.size(); ++i)
    if (!set_order_less(fam.all[i - 1], fam.all[i]))
      throw std::invalid_argument(
          "build_dual: family is not in canonical order");
  const int c0 = fam.cvals[0];
  for (std::size_t i = 0; i < fam.all.size(); ++i) {
    const VertexSet s = fam.all[i];
    if (!s.subset_of(g.vertices()))
      throw std::invalid_argument("build_dual: " + s.to_string() +
                                  " is not a vertex subset");
    const int cs = c(g, s);
    if (cs != fam.cvals[i])
      throw std::invalid_argument("build_dual: declared c-value of " +
                                  s.to_string() + " is wrong");
    if (cs != s.size() + c0)
      throw std::invalid_argument("build_dual: graph is not unmixed (cut set " +
                                  s.to_string() + " has c=" +
                                  std::to_string(cs) + ")");
    for (int v : s)
      if (c(g, s.without(v)) >= cs)
        throw std::invalid_argument("build_dual: " + s.to_string() +
                                    " is not a cut set");
  }
  return assemble(g, fam);
}

bool is_connected(const DualGraph& d) {
  if (d.nodes.empty()) return true;
  std::vector<int> dist;
  bfs_dist(d, 0, dist);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::optional<int> diameter(const DualGraph& d) {
  const int nn = static_cast<int>(d.nodes.size());
  if (nn == 0) return 0;
  std::vector<int> dist;
  if (bfs_dist(d, 0, dist); std::find(dist.begin(), dist.end(), -1) != dist.end())
    return std::nullopt;
  if (nn <= 1500) {
    int best = 0;
    for (int v = 0; v < nn; ++v) best = std::max(best, bfs_dist(d, v, dist));
    return best;
  }

  // Fringe search rooted near the middle of an approximate diametral path.
  // Nodes are processed layer by layer from the deepest inward; once the best
  // eccentricity reaches twice the current depth, no unprocessed pair can
  // beat it (two nodes of depth <= i are at distance <= 2i).
  const int a = static_cast<int>(
      std::max_element(dist.begin(), dist.end()) - dist.begin());
  std::vector<int> dist_a, dist_b;
  bfs_dist(d, a, dist_a);
  const int b = static_cast<int>(
      std::max_element(dist_a.begin(), dist_a.end()) - dist_a.begin());
  bfs_dist(d, b, dist_b);
  int lb = dist_a[b];
  int root = a;
  for (int v = 0; v < nn; ++v)  // midpoint of an a-b geodesic
    if (dist_a[v] + dist_b[v] == lb && std::abs(dist_a[v] - dist_b[v]) <= 1) {
      root = v;
      break;
    }
  std::vector<int> depth;
  const int h = bfs_dist(d, root, depth);
  std::vector<std::vector<int>> layer(h + 1);
  for (int v = 0; v < nn; ++v) layer[depth[v]].push_back(v);
  for (int i = h; i >= 1; --i) {
    if (lb >= 2 * i) break;
    for (int v : layer[i]) lb = std::max(lb, bfs_dist(d, v, dist));
  }
  return lb;
}

bool hirsch_check(const DualGraph& d) {
  const std::optional<int> diam = diameter(d);
  if (!diam)
    throw std::invalid_argument("hirsch_check: dual graph is disconnected");
  return *diam <= d.height;
}

bool hirsch_check(const Graph& g) { return hirsch_check(build_dual(g)); }

std::string dual_to_dot(const DualGraph& d) {
  std::string out = "graph dual {\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const std::string label =
        d.nodes[i].empty() ? "P_∅" : "P_" + d.nodes[i].to_string();
    out += "  v" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (auto [i, j] : d.edges)
    out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::json dual_to_json(const DualGraph& d) {
  nlohmann::json out;
  nlohmann::json nodes = nlohmann::json::array();
  for (const VertexSet& s : d.nodes) nodes.push_back(s.to_vector());
  out["nodes"] = std::move(nodes);
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : d.edges) edges.push_back({i, j});
  out["edges"] = std::move(edges);
  const std::optional<int> diam = diameter(d);
  out["connected"] = diam.has_value();
  out["diameter"] = diam ? nlohmann::json(*diam) : nlohmann::json(nullptr);
  out["hirsch"] = diam ? nlohmann::json(*diam <= d.height) : nlohmann::json(nullptr);
  return out;
}

}  // namespace beid
