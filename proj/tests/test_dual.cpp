#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "beid/census.hpp"
#include "beid/constructions.hpp"
#include "beid/cutsets.hpp"
#include "beid/dual.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace beid;

namespace {

// Compares a dual graph against an expected node list and edge list given as
// vertex sets (order-insensitive on edges).
void expect_dual(const DualGraph& d, const std::vector<VertexSet>& nodes,
                 const std::vector<std::pair<VertexSet, VertexSet>>& edges) {
  REQUIRE(d.nodes == nodes);
  std::vector<std::pair<int, int>> expect;
  for (auto [a, b] : edges) {
    auto ia = std::find(nodes.begin(), nodes.end(), a) - nodes.begin();
    auto ib = std::find(nodes.begin(), nodes.end(), b) - nodes.begin();
    REQUIRE(ia < static_cast<long>(nodes.size()));
    REQUIRE(ib < static_cast<long>(nodes.size()));
    expect.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(expect.begin(), expect.end());
  CHECK(d.edges == expect);
}

}  // namespace

TEST_CASE("offset ladder M_{3,4}: the figure with one isolated prime") {
  Graph g = make_M(4, false);
  DualGraph d = build_dual(g);
  const VertexSet e, s2 = VertexSet::single(2), s6 = VertexSet::single(6),
                  s26 = VertexSet::of({2, 6}), s35 = VertexSet::of({3, 5}),
                  s246 = VertexSet::of({2, 4, 6});
  expect_dual(d, {e, s2, s6, s26, s35, s246},
              {{e, s2}, {e, s6}, {s2, s26}, {s6, s26}, {s26, s246}});
  CHECK(!is_connected(d));
  CHECK(!diameter(d).has_value());
  CHECK(d.height == 6);
  CHECK_THROWS_AS(hirsch_check(d), std::invalid_argument);
}

TEST_CASE("square ladders M_{k,k}: a four-cycle plus two isolated primes") {
  {
    Graph g = make_M(4, true);
    DualGraph d = build_dual(g);
    const VertexSet e, s2 = VertexSet::single(2), s7 = VertexSet::single(7),
                    s27 = VertexSet::of({2, 7}), odd = VertexSet::of({3, 5, 7}),
                    even = VertexSet::of({2, 4, 6});
    expect_dual(d, {e, s2, s7, s27, even, odd},
                {{e, s2}, {e, s7}, {s2, s27}, {s7, s27}});
    CHECK(!is_connected(d));
  }
  {
    Graph g = make_M(5, true);
    DualGraph d = build_dual(g);
    const VertexSet e, s2 = VertexSet::single(2), s9 = VertexSet::single(9),
                    s29 = VertexSet::of({2, 9}),
                    odd = VertexSet::of({3, 5, 7, 9}),
                    even = VertexSet::of({2, 4, 6, 8});
    expect_dual(d, {e, s2, s9, s29, even, odd},
                {{e, s2}, {e, s9}, {s2, s29}, {s9, s29}});
    CHECK(!is_connected(d));
  }
}

TEST_CASE("offset ladder M_{4,5}: isolated primes on both deleted fringes") {
  Graph g = make_M(5, false);
  DualGraph d = build_dual(g);
  const VertexSet e, s2 = VertexSet::single(2), s8 = VertexSet::single(8),
                  s28 = VertexSet::of({2, 8}), odd = VertexSet::of({3, 5, 7}),
                  even = VertexSet::of({2, 4, 6, 8});
  expect_dual(d, {e, s2, s8, s28, odd, even},
              {{e, s2}, {e, s8}, {s2, s28}, {s8, s28}});
  CHECK(!is_connected(d));
}

TEST_CASE("non-bipartite graph with connected dual but no peeling") {
  Graph g = fixtures::dual_connected_not_cm();
  CutSetFamily fam = enumerate_cut_sets(g);
  REQUIRE(fam.size() == 9);
  CHECK(is_unmixed(fam).unmixed);
  CHECK(!peeling_holds(fam).holds);
  DualGraph d = build_dual(g, fam);
  const VertexSet e, s2 = VertexSet::single(2), s5 = VertexSet::single(5),
                  s24 = VertexSet::of({2, 4}), s25 = VertexSet::of({2, 5}),
                  s34 = VertexSet::of({3, 4}), s35 = VertexSet::of({3, 5}),
                  s234 = VertexSet::of({2, 3, 4}), s345 = VertexSet::of({3, 4, 5});
  expect_dual(d, {e, s2, s5, s24, s25, s34, s35, s234, s345},
              {{e, s5},
               {e, s2},
               {s5, s25},
               {s25, s2},
               {s5, s35},
               {s35, s345},
               {s345, s34},
               {s2, s24},
               {s35, s25},
               {s25, s24},
               {s24, s234},
               {s234, s345},
               {s234, s34}});
  CHECK(is_connected(d));
  CHECK(diameter(d) == 4);
  CHECK(hirsch_check(d));
}

TEST_CASE("two-connected unmixed graph: both primes isolated") {
  Graph g = fixtures::two_connected_unmixed();
  DualGraph d = build_dual(g);
  REQUIRE(d.nodes.size() == 2);
  CHECK(d.nodes[0] == VertexSet());
  CHECK(d.nodes[1] == VertexSet::of({1, 2}));
  CHECK(d.edges.empty());
  CHECK(!is_connected(d));
}

TEST_CASE("build_dual refuses mixed input") {
  Graph chain = elaborate(parse_expr("F3 o F2 o F3")).graph;
  bool threw = false;
  try {
    build_dual(chain);
  } catch (const std::invalid_argument& err) {
    threw = true;
    CHECK(std::string(err.what()).find("{3,5,6,8}") != std::string::npos);
  }
  CHECK(threw);
  CHECK_THROWS_AS(build_dual(fixtures::claw(4)), std::invalid_argument);
  CHECK_THROWS_AS(hirsch_check(fixtures::claw(4)), std::invalid_argument);
}

TEST_CASE("dual_edge validates its arguments") {
  Graph p5 = fixtures::path(5);
  CHECK(dual_edge(p5, VertexSet(), VertexSet::single(2)));
  CHECK_THROWS_AS(dual_edge(p5, VertexSet(), VertexSet()), std::invalid_argument);
  CHECK_THROWS_AS(dual_edge(p5, VertexSet::single(1), VertexSet()),
                  std::invalid_argument);
  CHECK_THROWS_AS(dual_edge(fixtures::claw(4), VertexSet(), VertexSet::single(1)),
                  std::invalid_argument);
}

TEST_CASE("staircase duals are connected with diameter m - 1") {
  for (int m = 2; m <= 6; ++m) {
    DualGraph d = build_dual(make_F(m));
    CHECK(is_connected(d));
    CHECK(diameter(d) == m - 1);
    CHECK(hirsch_check(d));
    CHECK(hirsch_check(make_F(m)));
  }
}

TEST_CASE("connectivity tracks peeling on connected bipartite graphs") {
  for (const auto& level : graph_levels(7, true))
    for (const Graph& g : level) {
      if (!is_connected(g)) continue;
      CutSetFamily fam = enumerate_cut_sets(g);
      bool unm = is_unmixed(fam).unmixed;
      bool peel = peeling_holds(fam).holds;
      if (!unm) continue;  // the dual criterion needs unmixedness
      CHECK(is_connected(build_dual(g, fam)) == peel);
    }
}

TEST_CASE("every cut set of a connected-dual bipartite graph has a cut vertex") {
  for (const auto& level : graph_levels(7, true))
    for (const Graph& g : level) {
      if (!is_connected(g)) continue;
      CutSetFamily fam = enumerate_cut_sets(g);
      if (!is_unmixed(fam).unmixed) continue;
      if (!is_connected(build_dual(g, fam))) continue;
      for (const VertexSet& s : fam.all) {
        if (s.empty()) continue;
        bool has_cut_vertex = false;
        for (int v : s)
          if (fam.contains(VertexSet::single(v))) has_cut_vertex = true;
        CHECK(has_cut_vertex);
      }
    }
}

TEST_CASE("intersections of adjacent or union-closed cut-set pairs") {
  for (const auto& level : graph_levels(7, false))
    for (const Graph& g : level) {
      CutSetFamily fam = enumerate_cut_sets(g);
      if (!is_unmixed(fam).unmixed) continue;
      bool bip = is_bipartite(g);
      for (std::size_t i = 0; i < fam.all.size(); ++i)
        for (std::size_t j = i + 1; j < fam.all.size(); ++j) {
          VertexSet s = fam.all[i], t = fam.all[j];
          if (s.size() == t.size() && (s - t).size() == 1 &&
              dual_edge(g, s, t, fam))
            CHECK(fam.contains(s & t));
          if (bip && fam.contains(s | t)) CHECK(fam.contains(s & t));
        }
    }
}

TEST_CASE("dual exports") {
  DualGraph d = build_dual(make_M(4, false));
  std::string dot = dual_to_dot(d);
  CHECK(dot.find("P_{3,5}") != std::string::npos);
  CHECK(dot.find("P_∅") != std::string::npos);
  nlohmann::json j = dual_to_json(d);
  CHECK(j["nodes"].size() == 6);
  CHECK(j["edges"].size() == 5);
  CHECK(j["connected"] == false);
  CHECK(j["diameter"].is_null());
  DualGraph f = build_dual(make_F(3));
  nlohmann::json jf = dual_to_json(f);
  CHECK(jf["connected"] == true);
  CHECK(jf["diameter"] == 2);
  CHECK(jf["hirsch"] == true);
}
