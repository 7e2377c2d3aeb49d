// The oracle is the referee for the fast engine, so it is pinned first: the
// forced self-check (height of a prime against the closed formula) and a set
// of hand-frozen height values must hold before any differential test below
// is allowed to mean anything.

#include <random>
#include <utility>

#include "beid/census.hpp"
#include "beid/guard.hpp"
#include "beid/constructions.hpp"
#include "beid/cutsets.hpp"
#include "beid/dual.hpp"
#include "beid/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace beid;

TEST_CASE("forced self-check: ht(P_S + P_S) reproduces n + |S| - c(S)") {
  std::vector<Graph> pool = {fixtures::path(4),
                             fixtures::path(6),
                             fixtures::cycle(6),
                             fixtures::claw(5),
                             make_F(3),
                             make_F(4),
                             make_M(4, false),
                             make_M(4, true),
                             fixtures::dual_connected_not_cm(),
                             fixtures::two_connected_unmixed()};
  for (const Graph& g : pool) {
    CutSetFamily fam = enumerate_cut_sets(g);
    for (std::size_t i = 0; i < fam.all.size(); ++i) {
      VertexSet s = fam.all[i];
      CHECK(oracle_height_sum(g, s, s) == g.n() + s.size() - fam.cvals[i]);
    }
  }
  // and exhaustively over every catalogued graph on up to 6 vertices
  for (const auto& level : graph_levels(6, false))
    for (const Graph& g : level) {
      CutSetFamily fam = enumerate_cut_sets(g);
      for (std::size_t i = 0; i < fam.all.size(); ++i)
        CHECK(oracle_height_sum(g, fam.all[i], fam.all[i]) ==
              g.n() + fam.all[i].size() - fam.cvals[i]);
    }
}

TEST_CASE("frozen height sums") {
  Graph p4 = fixtures::path(4);
  CHECK(oracle_height_sum(p4, VertexSet(), VertexSet::single(2)) == 4);
  CHECK(oracle_height_sum(p4, VertexSet::single(2), VertexSet::single(3)) == 4);

  Graph m34 = make_M(4, false);
  // the prime of {3,5} is height-6 like every other, but each pairing with a
  // neighbourless partner jumps two, which is what isolates it
  CHECK(oracle_height_sum(m34, VertexSet::of({3, 5}), VertexSet()) == 8);
  CHECK(oracle_height_sum(m34, VertexSet::of({3, 5}), VertexSet::single(2)) == 8);
  CHECK(oracle_height_sum(m34, VertexSet::of({2, 6}), VertexSet::of({2, 4, 6})) == 7);
  CHECK(oracle_height_sum(m34, VertexSet::single(2), VertexSet::single(6)) == 8);
  CHECK(ideal_height(m34) == 6);
}

TEST_CASE("oracle rejects non-cut-sets and oversized graphs") {
  Graph p4 = fixtures::path(4);
  CHECK_THROWS_AS(oracle_height_sum(p4, VertexSet::single(1), VertexSet()),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle_height_sum(p4, VertexSet(), VertexSet::of({2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle_cut_sets(fixtures::path(13)), guard_error);
}

TEST_CASE("oracle cut-set scan agrees with the engine exhaustively") {
  for (const auto& level : graph_levels(7, false))
    for (const Graph& g : level) {
      CutSetFamily fast = enumerate_cut_sets(g);
      CutSetFamily slow = oracle_cut_sets(g);
      REQUIRE(fast.all == slow.all);
      CHECK(fast.cvals == slow.cvals);
    }
  for (const Graph& g : all_graphs(9, true)) {
    CutSetFamily fast = enumerate_cut_sets(g);
    CutSetFamily slow = oracle_cut_sets(g);
    REQUIRE(fast.all == slow.all);
    CHECK(fast.cvals == slow.cvals);
  }
}

TEST_CASE("oracle cut-set scan agrees on random graphs up to n = 12") {
  std::mt19937 rng(23);
  for (int n = 10; n <= 12; ++n)
    for (int it = 0; it < 12; ++it) {
      Graph g = fixtures::random_graph(n, it % 2 ? 0.2 : 0.45, rng);
      CutSetFamily fast = enumerate_cut_sets(g);
      CutSetFamily slow = oracle_cut_sets(g);
      REQUIRE(fast.all == slow.all);
      CHECK(fast.cvals == slow.cvals);
    }
}

TEST_CASE("raw-definition dual edge agrees with the criterion (n <= 6)") {
  for (const auto& level : graph_levels(6, false))
    for (const Graph& g : level) {
      CutSetFamily fam = enumerate_cut_sets(g);
      if (!is_unmixed(fam).unmixed) continue;
      int ht = ideal_height(g, fam);
      for (std::size_t i = 0; i < fam.all.size(); ++i)
        for (std::size_t j = i + 1; j < fam.all.size(); ++j) {
          HeightReport rep = oracle_height_report(g, fam.all[i], fam.all[j], ht);
          CHECK(rep.edge_by_definition ==
                dual_edge(g, fam.all[i], fam.all[j], fam));
          // two-new-vertex case: the height sum always jumps past ht + 1
          VertexSet s = fam.all[i], t = fam.all[j];
          if (t.size() < s.size()) std::swap(s, t);
          if ((t - s).size() >= 2) CHECK(rep.ht_sum > ht + 1);
        }
    }
}

TEST_CASE("height report fields are coherent") {
  Graph m34 = make_M(4, false);
  CutSetFamily fam = enumerate_cut_sets(m34);
  int ht = ideal_height(m34, fam);
  HeightReport rep =
      oracle_height_report(m34, VertexSet::of({2, 6}), VertexSet::of({2, 4, 6}), ht);
  CHECK(rep.ht_s == 6);
  CHECK(rep.ht_t == 6);
  CHECK(rep.ht_sum == 7);
  CHECK(rep.edge_by_definition);
  CHECK(oracle_dual_edge(m34, VertexSet::of({2, 6}), VertexSet::of({2, 4, 6})));
  CHECK(!oracle_dual_edge(m34, VertexSet::of({3, 5}), VertexSet()));
}
