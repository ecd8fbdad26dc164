#include <doctest.h>

#include <random>

#include "hypersquare/auxgraphs.hpp"
#include "hypersquare/errors.hpp"
#include "hypersquare/generators.hpp"
#include "oracles.hpp"

using namespace hypersquare;

namespace {

AuxGraph clique(int n, std::initializer_list<int> members) {
  AuxGraph g(n, VertexSet(n, members));
  const std::vector<int> m(members);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) g.add_edge(m[i], m[j]);
  return g;
}

bool symmetric(const AuxGraph& g) {
  const int n = g.universe();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v) != g.has_edge(v, u) || (u == v && g.has_edge(u, v))) return false;
  return true;
}

}  // namespace

TEST_CASE("G3 thresholds on the complete hypergraph") {
  const Hypergraph3 k10 = complete(10);
  CHECK(build_g3(k10, 0.3).edge_count() == 45);  // 336 >= 300
  CHECK(build_g3(k10, 0.4).edge_count() == 0);   // 336 < 400
  CHECK(ref::g3_count(ref::EdgeSet(k10), 0, 1) == 336);
  CHECK(build_g3(Hypergraph3(10, {}), 0.01).edge_count() == 0);
}

TEST_CASE("Gv thresholds on the complete hypergraph") {
  const Hypergraph3 k10 = complete(10);
  const AuxGraph g = build_gv(k10, 0, 0.3);
  CHECK(g.edge_count() == 36);  // 42 >= 30
  CHECK_FALSE(g.vertices().contains(0));
  CHECK(build_gv(k10, 0, 0.5).edge_count() == 0);  // 42 < 50
  CHECK(build_gv(Hypergraph3(10, {}), 3, 0.01).edge_count() == 0);
  CHECK_THROWS_AS(build_gv(k10, 10, 0.3), ArgumentError);
}

TEST_CASE("Gvw") {
  const AuxGraph g = build_gvw(complete(6), 0, 1);
  CHECK(g.vertices().to_vector() == std::vector<int>{2, 3, 4, 5});
  CHECK(g.edge_count() == 6);
  const AuxGraph h = build_gvw(complete(6).without(std::vector<Triple>{{0, 2, 3}}), 0, 1);
  CHECK_FALSE(h.has_edge(2, 3));
  CHECK(h.has_edge(2, 4));
  const AuxGraph none = build_gvw(Hypergraph3(6, {{2, 3, 4}}), 0, 1);
  CHECK(none.order() == 0);
  CHECK_THROWS_AS(build_gvw(complete(6), 2, 2), ArgumentError);
}

TEST_CASE("auxiliary graphs match brute-force counts") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 12; ++iter) {
    const int n = 7 + static_cast<int>(rng() % 3);
    const Hypergraph3 h = random_hypergraph(n, 0.75, rng());
    const ref::EdgeSet e(h);
    const double beta = 0.02 + 0.1 * static_cast<double>(rng() % 4);
    const AuxGraph g3 = build_g3(h, beta);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int w = (v + 1) % n;
    const AuxGraph gv = build_gv(h, v, beta);
    const AuxGraph gvw = build_gvw(h, v, w);
    CHECK(symmetric(g3));
    CHECK(symmetric(gv));
    CHECK(symmetric(gvw));
    CHECK(gvw.vertices() == h.pair_neighbors(v, w));
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        CHECK(g3.has_edge(x, y) == (static_cast<double>(ref::g3_count(e, x, y)) >= beta * n * n * n));
        if (x != v && y != v)
          CHECK(gv.has_edge(x, y) == (static_cast<double>(ref::gv_count(e, v, x, y)) >= beta * n * n));
        if (gvw.vertices().contains(x) && gvw.vertices().contains(y))
          CHECK(gvw.has_edge(x, y) == e.k4(x, y, v, w));
      }
    // Raising beta never adds edges.
    const AuxGraph higher = build_g3(h, beta + 0.05);
    for (auto [x, y] : higher.edges()) CHECK(g3.has_edge(x, y));
  }
}

TEST_CASE("walk counts") {
  AuxGraph path(3, VertexSet::all(3));
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(count_walks(path, 0, 2, 2) == 1);
  const AuxGraph k4 = clique(4, {0, 1, 2, 3});
  CHECK(count_walks(k4, 0, 1, 2) == 2);
  CHECK(count_walks(k4, 0, 1, 3) == 7);
  CHECK(count_walks(k4, 0, 1, 0) == 0);
  CHECK(count_walks(k4, 2, 2, 0) == 1);
  const AuxGraph part = clique(5, {0, 1, 2});
  CHECK_THROWS_AS(count_walks(part, 0, 4, 2), ArgumentError);
  const WalkCountTable t = walk_counts(k4, 0, 1);
  for (int u = 0; u < 4; ++u) CHECK(t.counts[static_cast<std::size_t>(u)] == (k4.has_edge(0, u) ? 1u : 0u));
}

TEST_CASE("walk counts equal explicit enumeration") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 5);
    AuxGraph g(n, VertexSet::all(n));
    ref::Adj adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) {
          g.add_edge(u, v);
          adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        }
    for (int s = 1; s <= 5; ++s)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) CHECK(count_walks(g, x, y, s) == ref::walks(adj, x, y, s));
  }
}

TEST_CASE("expansion report") {
  const ExpansionReport full = expansion_report(clique(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), 0.1, 8, 1);
  CHECK(full.exhaustive);
  CHECK_FALSE(full.violation);
  CHECK(full.best_crossing >= 10);

  AuxGraph two(16, VertexSet::all(16));
  for (int base : {0, 8})
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) two.add_edge(base + i, base + j);
  const ExpansionReport split = expansion_report(two, 0.01, 8, 1);
  CHECK(split.exhaustive);
  CHECK(split.violation);
  CHECK(split.best_crossing == 0);

  const ExpansionReport empty = expansion_report(AuxGraph(12, VertexSet::all(12)), 0.05, 8, 1);
  CHECK(empty.violation);
  CHECK_FALSE(empty.degree_ok);

  AuxGraph big(30, VertexSet::all(30));
  for (int base : {0, 15})
    for (int i = 0; i < 15; ++i)
      for (int j = i + 1; j < 15; ++j) big.add_edge(base + i, base + j);
  const ExpansionReport heur = expansion_report(big, 0.01, 16, 3);
  CHECK_FALSE(heur.exhaustive);
  CHECK(heur.violation);
  CHECK(heur.best_crossing == 0);
  CHECK(expansion_report(big, 0.01, 16, 3).side_x == heur.side_x);
}
