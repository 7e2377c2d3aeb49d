#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "beid/canonical.hpp"
#include "beid/census.hpp"
#include "beid/graph.hpp"
#include "beid/graph6.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace beid;

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of({2, 4, 6});
  CHECK(s.size() == 3);
  CHECK(s.contains(4));
  CHECK(!s.contains(3));
  CHECK(s.min() == 2);
  CHECK(s.with(1).min() == 1);
  CHECK(s.without(2) == VertexSet::of({4, 6}));
  CHECK(s.to_vector() == std::vector<int>{2, 4, 6});
  CHECK(s.to_string() == "{2,4,6}");
  CHECK(VertexSet().to_string() == "{}");
  CHECK((s & VertexSet::of({4, 5})) == VertexSet::single(4));
  CHECK((s | VertexSet::single(1)) == VertexSet::of({1, 2, 4, 6}));
  CHECK((s - VertexSet::of({2, 6})) == VertexSet::single(4));
  CHECK(VertexSet::of({2, 4}).subset_of(s));
  CHECK(!s.subset_of(VertexSet::of({2, 4})));
  CHECK(VertexSet::full(3) == VertexSet::of({1, 2, 3}));
}

TEST_CASE("set ordering is by size then lexicographic members") {
  CHECK(set_order_less(VertexSet(), VertexSet::single(1)));
  CHECK(set_order_less(VertexSet::single(9), VertexSet::of({1, 2})));
  CHECK(set_order_less(VertexSet::of({2, 6}), VertexSet::of({3, 5})));
  CHECK(!set_order_less(VertexSet::of({3, 5}), VertexSet::of({2, 6})));
  CHECK(!set_order_less(VertexSet::of({2, 6}), VertexSet::of({2, 6})));
}

TEST_CASE("from_edges validates input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(65, {}), std::invalid_argument);
  Graph g = Graph::from_edges(3, {{1, 2}, {2, 3}});
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(!g.adjacent(1, 3));
  CHECK(g.degree(2) == 2);
  CHECK(g.neighbors(2) == VertexSet::of({1, 3}));
}

TEST_CASE("components are ordered by smallest member") {
  Graph g = Graph::from_edges(6, {{2, 4}, {1, 5}, {3, 6}});
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet::of({1, 5}));
  CHECK(comps[1] == VertexSet::of({2, 4}));
  CHECK(comps[2] == VertexSet::of({3, 6}));
  CHECK(!is_connected(g));
  CHECK(is_connected(fixtures::path(6)));
}

TEST_CASE("c counts the components left by deleting a set") {
  Graph p5 = fixtures::path(5);
  CHECK(c(p5, VertexSet()) == 1);
  CHECK(c(p5, VertexSet::single(3)) == 2);
  CHECK(c(p5, VertexSet::of({2, 4})) == 3);
  CHECK(c(p5, VertexSet::of({1, 2, 3, 4, 5})) == 0);
  // block count of the induced complement always matches c
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    Graph g = fixtures::random_graph(8, 0.3, rng);
    std::uniform_int_distribution<int> pick(0, 255);
    VertexSet s = VertexSet::of_bits(static_cast<std::uint64_t>(pick(rng)));
    CHECK(components_within(g, g.vertices() - s).size() ==
          static_cast<std::size_t>(c(g, s)));
  }
}

TEST_CASE("deleting one more vertex moves c by -1 to deg-1") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    Graph g = fixtures::random_graph(9, 0.25, rng);
    std::uniform_int_distribution<int> pick(0, 511);
    VertexSet s = VertexSet::of_bits(static_cast<std::uint64_t>(pick(rng)));
    for (int t = 1; t <= 9; ++t) {
      if (s.contains(t)) continue;
      int before = c(g, s);
      int after = c(g, s.with(t));
      CHECK(after - before >= -1);
      CHECK(after - before <= std::max(0, g.degree(t) - 1));
    }
  }
}

TEST_CASE("bipartition two-colors every edge") {
  std::mt19937 rng(13);
  int found = 0;
  for (int it = 0; it < 200; ++it) {
    Graph g = fixtures::random_graph(8, 0.15, rng);
    auto bip = bipartition(g);
    CHECK(bip.has_value() == is_bipartite(g));
    if (!bip) continue;
    ++found;
    for (auto [u, v] : g.edge_list())
      CHECK(bip->side1.contains(u) != bip->side1.contains(v));
    // smallest vertex of each component sits on side1
    for (const VertexSet& comp : components(g)) CHECK(bip->side1.contains(comp.min()));
  }
  CHECK(found > 0);
  CHECK(!bipartition(fixtures::cycle(5)));
  CHECK(bipartition(fixtures::cycle(6)));
}

TEST_CASE("leaves, neighborhoods and free vertices") {
  Graph p4 = fixtures::path(4);
  CHECK(leaves(p4) == VertexSet::of({1, 4}));
  CHECK(neighbors(p4, VertexSet::of({1, 4})) == VertexSet::of({2, 3}));
  // path ends lie in a single edge-clique; interior vertices do not
  CHECK(free_vertices(p4) == VertexSet::of({1, 4}));
  // every vertex of a complete graph is free
  CHECK(free_vertices(fixtures::complete(4)) == VertexSet::full(4));
  CHECK(free_vertices(fixtures::cycle(5)) == VertexSet());
  CHECK(leaves(fixtures::claw(4)) == VertexSet::of({2, 3, 4}));
}

TEST_CASE("induced subgraph relabels in order and reports the label map") {
  Graph p5 = fixtures::path(5);
  std::vector<int> labels;
  Graph sub = induced_subgraph(p5, VertexSet::of({2, 3, 5}), &labels);
  CHECK(sub.n() == 3);
  CHECK(labels == std::vector<int>{2, 3, 5});
  CHECK(sub.adjacent(1, 2));   // 2-3 survives
  CHECK(!sub.adjacent(2, 3));  // 3-5 was never an edge
  CHECK(sub.edge_count() == 1);
}

TEST_CASE("cut vertex test inside an induced subgraph") {
  Graph p5 = fixtures::path(5);
  CHECK(is_cut_vertex_in_induced(p5, VertexSet(), 3));
  CHECK(!is_cut_vertex_in_induced(p5, VertexSet(), 1));
  // inside V - {2}, vertex 3 no longer separates 4 from 5
  CHECK(!is_cut_vertex_in_induced(p5, VertexSet::single(2), 3));
  CHECK(is_cut_vertex_in_induced(p5, VertexSet::single(1), 3));
  CHECK_THROWS_AS(is_cut_vertex_in_induced(p5, VertexSet::single(3), 3),
                  std::invalid_argument);
}

TEST_CASE("graph6 frozen encodings match the published format") {
  CHECK(graph6_encode(fixtures::complete(4)) == "C~");
  CHECK(graph6_encode(fixtures::path(4)) == "Ch");
  CHECK(graph6_encode(fixtures::cycle(5)) == "Dhc");
  CHECK(graph6_encode(fixtures::claw(4)) == "Cs");
  CHECK(graph6_encode(Graph::from_edges(1, {})) == "@");
  Graph k33 = Graph::from_edges(
      6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
  CHECK(graph6_encode(k33) == "EFz_");
  Graph petersen = Graph::from_edges(
      10, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 4},  {3, 8}, {4, 5},
           {4, 9}, {5, 10}, {6, 8}, {6, 9}, {7, 9}, {7, 10}, {8, 10}});
  CHECK(graph6_encode(petersen) == "IheA@GUAo");
  CHECK(graph6_decode("IheA@GUAo") == petersen);
  CHECK(graph6_decode(">>graph6<<Ch") == fixtures::path(4));
}

TEST_CASE("graph6 round-trips every catalogued graph") {
  for (const auto& level : graph_levels(6, false))
    for (const Graph& g : level) {
      std::string s = graph6_encode(g);
      CHECK(graph6_decode(s) == g);
      CHECK(graph6_encode(graph6_decode(s)) == s);
    }
}

TEST_CASE("graph6 decoder rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("C"), std::invalid_argument);     // truncated
  CHECK_THROWS_AS(graph6_decode("Ch "), std::invalid_argument);   // trailing
  CHECK_THROWS_AS(graph6_decode("C\x01"), std::invalid_argument); // bad byte
  CHECK_THROWS_AS(graph6_decode("B@"), std::invalid_argument);    // padding
  CHECK_THROWS_AS(graph6_decode("?"), std::invalid_argument);     // n = 0
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(17);
  std::vector<Graph> pool = {fixtures::path(7),   fixtures::cycle(6),
                             fixtures::complete(5), fixtures::claw(6),
                             fixtures::two_connected_unmixed(),
                             fixtures::random_graph(8, 0.4, rng),
                             fixtures::random_graph(9, 0.2, rng)};
  for (const Graph& g : pool) {
    std::string base = canonical_form(g);
    std::vector<int> perm(g.n());
    for (int v = 1; v <= g.n(); ++v) perm[v - 1] = v;
    for (int it = 0; it < 100; ++it) {
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = permute(g, perm);
      CHECK(canonical_form(h) == base);
      CHECK(is_isomorphic(g, h));
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  CHECK(!is_isomorphic(fixtures::path(5), fixtures::cycle(5)));
  CHECK(!is_isomorphic(fixtures::claw(4), fixtures::path(4)));
  // two trees on 6 vertices with equal degree sequences
  Graph t1 = Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {4, 7}});
  Graph t2 = Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {3, 7}});
  CHECK(!is_isomorphic(t1, t2));
  // all catalogued classes at n = 6 are pairwise distinct
  std::set<std::string> forms;
  for (const Graph& g : all_graphs(6, false)) forms.insert(canonical_form(g));
  CHECK(forms.size() == 156);
}

TEST_CASE("permute validates its permutation") {
  Graph p4 = fixtures::path(4);
  CHECK_THROWS_AS(permute(p4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(permute(p4, {1, 2, 2, 4}), std::invalid_argument);
  Graph h = permute(p4, {4, 3, 2, 1});
  CHECK(h.adjacent(4, 3));
  CHECK(h.adjacent(2, 1));
  CHECK(is_isomorphic(h, p4));
}

TEST_CASE("dot export lists vertices and edges") {
  std::string dot = to_dot(fixtures::path(3));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
  CHECK(dot.find("2 -- 3") != std::string::npos);
}
