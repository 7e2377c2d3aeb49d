#include "beid/cutsets.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "beid/guard.hpp"

namespace beid {

int CutSetFamily::index_of(VertexSet s) const {
  auto it = std::lower_bound(all.begin(), all.end(), s, set_order_less);
  if (it == all.end() || *it != s) return -1;
  return static_cast<int>(it - all.begin());
}

bool is_cut_set(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("is_cut_set: set contains labels outside 1..n");
  if (s.empty()) return true;
  const int cs = c(g, s);
  for (int i : s)
    if (c(g, s.without(i)) >= cs) return false;
  return true;
}

CutSetFamily enumerate_cut_sets(const Graph& g) {
  // Free vertices never lie in a cut set (their neighborhood is a clique, so
  // deleting them never splits a component), which shrinks the subset scan to
  // the non-free vertices.  The oracle module re-derives families without this
  // shortcut; the differential tests keep it honest.
  const std::vector<int> cand = (g.vertices() - free_vertices(g)).to_vector();
  const int k = static_cast<int>(cand.size());
  check_guard("cut-set enumeration (2^k subsets over k non-free vertices)", k, 24);

  // cvals_by_mask[m] = c_G(S_m) where S_m is the subset of `cand` selected by
  // the bits of m.  Small enough to hold: component counts fit in a byte.
  const std::uint32_t nmask = 1u << k;
  std::vector<std::uint8_t> cvals_by_mask(nmask);
  const VertexSet verts = g.vertices();
  for (std::uint32_t m = 0; m < nmask; ++m) {
    VertexSet s;
    for (int b = 0; b < k; ++b)
      if (m & (1u << b)) s = s.with(cand[b]);
    cvals_by_mask[m] =
        static_cast<std::uint8_t>(component_count_within(g, verts - s));
  }

  std::vector<std::pair<VertexSet, int>> found;
  found.emplace_back(VertexSet(), cvals_by_mask[0]);
  for (std::uint32_t m = 1; m < nmask; ++m) {
    const int cm = cvals_by_mask[m];
    bool minimal = true;
    for (std::uint32_t rest = m; rest && minimal; rest &= rest - 1)
      minimal = cvals_by_mask[m ^ (rest & -rest)] < cm;
    if (!minimal) continue;
    VertexSet s;
    for (int b = 0; b < k; ++b)
      if (m & (1u << b)) s = s.with(cand[b]);
    found.emplace_back(s, cm);
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return set_order_less(a.first, b.first); });
  CutSetFamily fam;
  fam.all.reserve(found.size());
  fam.cvals.reserve(found.size());
  for (const auto& [s, cv] : found) {
    fam.all.push_back(s);
    fam.cvals.push_back(cv);
  }
  return fam;
}

std::vector<MinimalPrime> minimal_primes(const Graph& g) {
  const CutSetFamily fam = enumerate_cut_sets(g);
  std::vector<MinimalPrime> primes;
  primes.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    MinimalPrime p;
    p.cutset = fam.all[i];
    p.blocks = components_within(g, g.vertices() - fam.all[i]);
    p.height = g.n() + fam.all[i].size() - static_cast<int>(p.blocks.size());
    primes.push_back(std::move(p));
  }
  return primes;
}

int ideal_height(const Graph& g, const CutSetFamily& fam) {
  int ht = g.n();  // any prime beats this: height <= n - 1 always
  for (std::size_t i = 0; i < fam.size(); ++i)
    ht = std::min(ht, g.n() + fam.all[i].size() - fam.cvals[i]);
  return ht;
}

int ideal_height(const Graph& g) { return ideal_height(g, enumerate_cut_sets(g)); }

UnmixedReport is_unmixed(const CutSetFamily& fam) {
  // All heights equal forces c(S) = |S| + c({}) for every S; for connected
  // graphs this is the familiar c(S) = |S| + 1.
  const int c0 = fam.cvals.empty() ? 1 : fam.cvals[0];
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam.cvals[i] != fam.all[i].size() + c0) {
      UnmixedReport r;
      r.unmixed = false;
      r.witness = fam.all[i];
      r.witness_c = fam.cvals[i];
      return r;
    }
  }
  UnmixedReport r;
  r.unmixed = true;
  return r;
}

UnmixedReport is_unmixed(const Graph& g) {
  return is_unmixed(enumerate_cut_sets(g));
}

PeelingReport peeling_holds(const CutSetFamily& fam) {
  for (const VertexSet& s : fam.all) {
    if (s.empty()) continue;
    bool peels = false;
    for (int v : s) {
      if (fam.contains(s.without(v))) {
        peels = true;
        break;
      }
    }
    if (!peels) {
      PeelingReport r;
      r.holds = false;
      r.witness = s;
      return r;
    }
  }
  PeelingReport r;
  r.holds = true;
  return r;
}

PeelingReport peeling_holds(const Graph& g) {
  return peeling_holds(enumerate_cut_sets(g));
}

int dimension(const Graph& g) {
  const CutSetFamily fam = enumerate_cut_sets(g);
  if (!is_unmixed(fam).unmixed)
    throw std::invalid_argument("dimension: graph is not unmixed");
  const int c0 = fam.cvals.empty() ? 1 : fam.cvals[0];
  return g.n() + c0;
}

nlohmann::json cutsets_to_json(const Graph& g, const CutSetFamily& fam) {
  nlohmann::json out;
  out["n"] = g.n();
  nlohmann::json sets = nlohmann::json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    nlohmann::json row;
    row["S"] = fam.all[i].to_vector();
    row["c"] = fam.cvals[i];
    row["height"] = g.n() + fam.all[i].size() - fam.cvals[i];
    sets.push_back(std::move(row));
  }
  out["cutsets"] = std::move(sets);
  return out;
}

}  // namespace beid
