#include <doctest.h>

#include <cmath>

#include "hypersquare/errors.hpp"
#include "hypersquare/generators.hpp"
#include "oracles.hpp"

using namespace hypersquare;

TEST_CASE("complete") {
  CHECK(complete(5).edge_count() == 10);
  CHECK(complete(4).edge_count() == 4);
  CHECK(is_k4(complete(4), 0, 1, 2, 3));
  CHECK(complete(3).edge_count() == 1);
  CHECK_THROWS_AS(complete(2), ArgumentError);
}

TEST_CASE("four-part construction follows its edge rules") {
  CHECK_THROWS_AS(pikhurko(7), ArgumentError);
  for (int n : {8, 9, 10, 11, 12, 16}) {
    const PikhurkoInstance inst = pikhurko(n);
    const Hypergraph3& h = inst.hypergraph;
    std::size_t total = 0;
    for (int i = 0; i < 4; ++i) {
      total += inst.partition.parts[static_cast<std::size_t>(i)].size();
      for (int j = 0; j < 4; ++j)
        CHECK(std::abs(static_cast<int>(inst.partition.parts[static_cast<std::size_t>(i)].size()) -
                       static_cast<int>(inst.partition.parts[static_cast<std::size_t>(j)].size())) <= 1);
      for (int v : inst.partition.parts[static_cast<std::size_t>(i)]) CHECK(inst.partition.part_of(v) == i);
    }
    CHECK(total == static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          int cnt[4] = {0, 0, 0, 0};
          for (int v : {a, b, c}) ++cnt[v % 4];
          const int outside_parts = (cnt[1] > 0) + (cnt[2] > 0) + (cnt[3] > 0);
          bool rule = cnt[0] == 2;
          rule = rule || (cnt[0] == 1 && outside_parts == 2);
          rule = rule || cnt[1] == 3 || cnt[2] == 3 || cnt[3] == 3;
          rule = rule || (cnt[0] == 0 && outside_parts == 2);
          CHECK(h.has_edge(a, b, c) == rule);
        }
  }
}

TEST_CASE("named non-edges of the construction") {
  const Hypergraph3 p = pikhurko(12).hypergraph;
  CHECK_FALSE(p.has_edge(0, 4, 8));  // inside A0
  CHECK_FALSE(p.has_edge(1, 2, 3));  // one vertex in each of A1, A2, A3
  CHECK(p.has_edge(0, 4, 1));        // two in A0
  CHECK(min_pair_degree(pikhurko(8).hypergraph) == 4);
}

TEST_CASE("tetrahedra meeting A0 have two vertices there") {
  for (int n : {8, 12, 16}) {
    const auto k4s = enumerate_k4s(pikhurko(n).hypergraph);
    CHECK_FALSE(k4s.empty());
    for (const auto& k : k4s) {
      const int in_a0 = (k[0] % 4 == 0) + (k[1] % 4 == 0) + (k[2] % 4 == 0) + (k[3] % 4 == 0);
      CHECK((in_a0 == 0 || in_a0 == 2));
    }
  }
}

TEST_CASE("random hypergraph") {
  CHECK(random_hypergraph(8, 1.0, 3).edges() == complete(8).edges());
  CHECK(random_hypergraph(8, 0.0, 3).edge_count() == 0);
  CHECK(random_hypergraph(8, 0.5, 42).edges() == random_hypergraph(8, 0.5, 42).edges());
  CHECK(random_hypergraph(8, 0.5, 42).edges() != random_hypergraph(8, 0.5, 43).edges());
  CHECK_THROWS_AS(random_hypergraph(8, 1.5, 1), ArgumentError);
  CHECK_THROWS_AS(random_hypergraph(8, -0.1, 1), ArgumentError);
}

TEST_CASE("dense random meets its pair-degree target") {
  CHECK(min_pair_degree(dense_random(20, 0.85, 1)) >= 17);
  CHECK_THROWS_AS(dense_random(10, 1.1, 1), ArgumentError);
  CHECK_THROWS_AS(dense_random(10, 0.9, 1), ArgumentError);  // ceil(9) > n - 2
  CHECK(dense_random(12, 0.8, 7).edges() == dense_random(12, 0.8, 7).edges());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 10 + static_cast<int>(seed % 20);
    const double t = 0.5 + 0.01 * static_cast<double>(seed % 30);
    const int need = static_cast<int>(std::ceil(t * n - 1e-9));
    if (need > n - 2) continue;
    const Hypergraph3 h = dense_random(n, t, seed);
    CHECK(min_pair_degree(h) >= need);
    CHECK(min_pair_degree(h) == ref::min_pair_degree(ref::EdgeSet(h)));
  }
}

TEST_CASE("repair only adds edges") {
  const Hypergraph3 base = random_hypergraph(15, 0.5, 11);
  const Hypergraph3 fixed = repair_to_pair_degree(15, 0.5, 11, 11);
  for (const auto& e : base.edges()) CHECK(fixed.has_edge(e[0], e[1], e[2]));
  CHECK(min_pair_degree(fixed) >= 11);
}

TEST_CASE("relabel") {
  const Hypergraph3 h = random_hypergraph(7, 0.5, 2);
  const std::vector<int> perm{3, 0, 6, 1, 5, 2, 4};
  const Hypergraph3 g = relabel(h, perm);
  CHECK(g.edge_count() == h.edge_count());
  for (const auto& e : h.edges()) CHECK(g.has_edge(perm[static_cast<std::size_t>(e[0])], perm[static_cast<std::size_t>(e[1])], perm[static_cast<std::size_t>(e[2])]));
  const std::vector<int> bad{0, 0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(relabel(h, bad), ArgumentError);
}
