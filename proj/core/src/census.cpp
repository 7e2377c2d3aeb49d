// Catalogue generation and the census survey.

#include "beid/census.hpp"

#include <atomic>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "beid/canonical.hpp"
#include "beid/classify.hpp"
#include "beid/cutsets.hpp"
#include "beid/dual.hpp"
#include "beid/graph6.hpp"
#include "beid/guard.hpp"

namespace beid {

namespace {

std::vector<Graph> extend_level(const std::vector<Graph>& prev,
                                bool bipartite_only) {
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& h : prev) {
    const int k = h.n();
    const std::vector<std::pair<int, int>> base = h.edge_list();
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      std::vector<std::pair<int, int>> edges = base;
      for (int v = 1; v <= k; ++v)
        if (mask >> (v - 1) & 1) edges.emplace_back(v, k + 1);
      Graph g = Graph::from_edges(k + 1, edges);
      if (bipartite_only && !is_bipartite(g)) continue;
      if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Graph>> graph_levels(int max_n, bool bipartite_only) {
  check_guard("graph catalogue", max_n, bipartite_only ? 10 : 8);
  if (max_n < 1) return {};
  std::vector<std::vector<Graph>> levels;
  levels.push_back({Graph::from_edges(1, {})});
  for (int n = 2; n <= max_n; ++n)
    levels.push_back(extend_level(levels.back(), bipartite_only));
  return levels;
}

std::vector<Graph> all_graphs(int n, bool bipartite_only) {
  return graph_levels(n, bipartite_only).back();
}

std::vector<Graph> connected_graphs(int n, bool bipartite_only) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n, bipartite_only))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

CensusRow census_row(const Graph& g) {
  CensusRow row;
  row.n = g.n();
  row.graph6 = graph6_encode(g);
  row.bipartite = is_bipartite(g);
  const CutSetFamily fam = enumerate_cut_sets(g);
  row.unmixed = is_unmixed(fam).unmixed;
  row.peeling = peeling_holds(fam).holds;
  if (row.unmixed) {
    const DualGraph d = build_dual(g, fam);
    row.dual_connected = is_connected(d);
    if ((row.diameter = diameter(d))) row.hirsch_ok = hirsch_check(d);
  }
  if (row.bipartite && is_connected(g)) row.certified = decompose(g).ok;
  return row;
}

namespace {

// Full survey of one connected graph: the row plus any invariant breaks.
void survey(const Graph& g, CensusRow& row, std::vector<std::string>& viol) {
  row = census_row(g);
  const std::string id = row.graph6;
  if (row.bipartite) {
    const bool bd = row.unmixed && row.peeling;
    if (row.dual_connected != bd || row.dual_connected != row.certified) {
      viol.push_back(id + ": dual_connected=" +
                     std::to_string(row.dual_connected) +
                     " unmixed&&peeling=" + std::to_string(bd) +
                     " certified=" + std::to_string(row.certified) +
                     " disagree");
    }
    if (row.unmixed && row.n >= 2 && leaves(g).size() != 2)
      viol.push_back(id + ": unmixed with " +
                     std::to_string(leaves(g).size()) + " leaves");
  }
  if (row.certified) {
    const DecomposeResult d = decompose(g);
    if (!(elaborate_certificate(d.certificate, g.n()) == g))
      viol.push_back(id + ": certificate does not rebuild the graph");
    if (!row.hirsch_ok)
      viol.push_back(id + ": dual diameter exceeds the ideal height");
  }
}

}  // namespace

std::vector<CensusRow> run_census(int max_n, bool bipartite_only, int jobs,
                                  std::vector<std::string>* violations) {
  std::vector<Graph> graphs;
  for (auto& level : graph_levels(max_n, bipartite_only))
    for (Graph& g : level)
      if (is_connected(g)) graphs.push_back(std::move(g));

  std::vector<CensusRow> rows(graphs.size());
  std::vector<std::vector<std::string>> viols(graphs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      survey(graphs[i], rows[i], viols[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();)
        survey(graphs[i], rows[i], viols[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (violations)
    for (std::vector<std::string>& v : viols)
      for (std::string& s : v) violations->push_back(std::move(s));
  return rows;
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,graph6,bipartite,unmixed,dual_connected,peeling,certified,"
         "diameter,hirsch_ok\n";
  for (const CensusRow& r : rows) {
    out << r.n << ',' << r.graph6 << ',' << r.bipartite << ',' << r.unmixed
        << ',' << r.dual_connected << ',' << r.peeling << ',' << r.certified
        << ',';
    if (r.diameter) out << *r.diameter;
    out << ',' << r.hirsch_ok << '\n';
  }
  return out.str();
}

nlohmann::json census_to_json(const std::vector<CensusRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CensusRow& r : rows) {
    nlohmann::json j{{"n", r.n},
                     {"graph6", r.graph6},
                     {"bipartite", r.bipartite},
                     {"unmixed", r.unmixed},
                     {"dual_connected", r.dual_connected},
                     {"peeling", r.peeling},
                     {"certified", r.certified},
                     {"hirsch_ok", r.hirsch_ok}};
    j["diameter"] = r.diameter ? nlohmann::json(*r.diameter) : nlohmann::json();
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace beid
