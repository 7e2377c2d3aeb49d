#include "beid/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "beid/guard.hpp"

namespace beid {

namespace {

// Plain adjacency lists, rebuilt from the edge list so that nothing below
// depends on the bitset representation or its traversal helpers.
std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(g.n()));
  for (auto [u, v] : g.edge_list()) {
    nb[static_cast<std::size_t>(u) - 1].push_back(v - 1);
    nb[static_cast<std::size_t>(v) - 1].push_back(u - 1);
  }
  return nb;
}

// Component labels of the subgraph induced on the vertices outside `removed`
// (0-based bitmask); removed vertices get label -1.  Returns the label count.
int component_labels(const std::vector<std::vector<int>>& nb,
                     std::uint64_t removed, std::vector<int>& label) {
  const int n = static_cast<int>(nb.size());
  label.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if ((removed >> start) & 1) continue;
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    label[static_cast<std::size_t>(start)] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : nb[static_cast<std::size_t>(v)]) {
        if ((removed >> w) & 1) continue;
        if (label[static_cast<std::size_t>(w)] >= 0) continue;
        label[static_cast<std::size_t>(w)] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

int component_count(const std::vector<std::vector<int>>& nb,
                    std::uint64_t removed) {
  std::vector<int> label;
  return component_labels(nb, removed, label);
}

// The definition, verbatim: S is a cut set iff S is empty or dropping any
// single member lowers the component count of what remains.
bool definition_cut_set(const std::vector<std::vector<int>>& nb,
                        std::uint64_t s) {
  if (s == 0) return true;
  const int cs = component_count(nb, s);
  for (std::uint64_t rest = s; rest; rest &= rest - 1) {
    const std::uint64_t i = rest & (~rest + 1);  // lowest set bit
    if (component_count(nb, s ^ i) >= cs) return false;
  }
  return true;
}

std::uint64_t mask_of(VertexSet s) { return s.bits(); }

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

CutSetFamily oracle_cut_sets(const Graph& g) {
  const int n = g.n();
  check_guard("oracle cut-set scan (2^n subsets)", n, 12);
  const auto nb = adjacency(g);
  std::vector<std::pair<VertexSet, int>> found;
  const std::uint64_t limit = 1ULL << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!definition_cut_set(nb, mask)) continue;
    found.emplace_back(VertexSet::of_bits(mask), component_count(nb, mask));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return set_order_less(a.first, b.first);
  });
  CutSetFamily fam;
  for (const auto& [s, cv] : found) {
    fam.all.push_back(s);
    fam.cvals.push_back(cv);
  }
  return fam;
}

int oracle_height_sum(const Graph& g, VertexSet s, VertexSet t) {
  const int n = g.n();
  check_guard("height oracle (stratified over 2^|W| supports)", n, 10);
  const auto nb = adjacency(g);
  if (!definition_cut_set(nb, mask_of(s)))
    throw std::invalid_argument("oracle_height_sum: " + s.to_string() +
                                " is not a cut set");
  if (!definition_cut_set(nb, mask_of(t)))
    throw std::invalid_argument("oracle_height_sum: " + t.to_string() +
                                " is not a cut set");

  std::vector<int> label_s, label_t;
  const int ns = component_labels(nb, mask_of(s), label_s);
  const int nt = component_labels(nb, mask_of(t), label_t);

  // Vertices that may carry a nonzero column: everything outside both cut
  // sets (sum of the primes kills both variable pairs).
  std::vector<int> support;
  for (int v = 0; v < n; ++v)
    if (!((mask_of(s) >> v) & 1) && !((mask_of(t) >> v) & 1))
      support.push_back(v);
  const int u = static_cast<int>(support.size());

  int best = 0;
  std::vector<int> parent, csize, last_s, last_t;
  for (std::uint64_t w = 0; w < (1ULL << u); ++w) {
    parent.assign(static_cast<std::size_t>(u), 0);
    csize.assign(static_cast<std::size_t>(u), 1);
    for (int p = 0; p < u; ++p) parent[static_cast<std::size_t>(p)] = p;
    last_s.assign(static_cast<std::size_t>(ns), -1);
    last_t.assign(static_cast<std::size_t>(nt), -1);
    // Link members of W sharing a block on either side; consecutive linking
    // per block is enough for the transitive closure.
    const auto link = [&](std::vector<int>& last, int label, int p) {
      int& prev = last[static_cast<std::size_t>(label)];
      if (prev >= 0) {
        const int ra = find_root(parent, prev);
        const int rb = find_root(parent, p);
        if (ra != rb) {
          parent[static_cast<std::size_t>(rb)] = ra;
          csize[static_cast<std::size_t>(ra)] += csize[static_cast<std::size_t>(rb)];
        }
      }
      prev = p;
    };
    for (int p = 0; p < u; ++p) {
      if (!((w >> p) & 1)) continue;
      const int v = support[static_cast<std::size_t>(p)];
      link(last_s, label_s[static_cast<std::size_t>(v)], p);
      link(last_t, label_t[static_cast<std::size_t>(v)], p);
    }
    // Each proportionality class of nonzero columns contributes its size plus
    // one dimension (a direction, then one scale per member).
    int dim = 0;
    for (int p = 0; p < u; ++p) {
      if (!((w >> p) & 1)) continue;
      if (find_root(parent, p) == p) dim += csize[static_cast<std::size_t>(p)] + 1;
    }
    best = std::max(best, dim);
  }
  return 2 * n - best;
}

HeightReport oracle_height_report(const Graph& g, VertexSet s, VertexSet t,
                                  int ideal_height) {
  const auto nb = adjacency(g);
  HeightReport r;
  r.s = s;
  r.t = t;
  r.ht_s = g.n() + s.size() - component_count(nb, mask_of(s));
  r.ht_t = g.n() + t.size() - component_count(nb, mask_of(t));
  r.ht_sum = oracle_height_sum(g, s, t);
  r.edge_by_definition = r.ht_sum - 1 == r.ht_s && r.ht_s == r.ht_t &&
                         r.ht_t == ideal_height;
  return r;
}

bool oracle_dual_edge(const Graph& g, VertexSet s, VertexSet t) {
  const CutSetFamily fam = oracle_cut_sets(g);
  int ht = g.n();
  for (std::size_t i = 0; i < fam.size(); ++i)
    ht = std::min(ht, g.n() + fam.all[i].size() - fam.cvals[i]);
  return oracle_height_report(g, s, t, ht).edge_by_definition;
}

}  // namespace beid
