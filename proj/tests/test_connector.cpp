#include <doctest.h>

#include <random>

#include "hypersquare/connector.hpp"
#include "hypersquare/errors.hpp"
#include "hypersquare/generators.hpp"
#include "oracles.hpp"

using namespace hypersquare;

namespace {

// Two complete(5) blocks on {0..4} and {5..9}.
Hypergraph3 two_blocks() {
  std::vector<Triple> e;
  for (int base : {0, 5})
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        for (int c = b + 1; c < 5; ++c) e.push_back({base + a, base + b, base + c});
  return Hypergraph3(10, e);
}

void check_connection(const Hypergraph3& h, const VertexSeq& s, const Triple& abc, const Triple& xyz,
                      const VertexSet& forbidden, int cap_m) {
  CHECK(is_squared_path(h, s));
  CHECK(s.front_triple() == abc);
  CHECK(s.back_triple() == xyz);
  CHECK(static_cast<int>(s.size()) - 6 < cap_m);
  for (std::size_t i = 3; i + 3 < s.size(); ++i) CHECK_FALSE(forbidden.contains(s.vertices[i]));
}

}  // namespace

TEST_CASE("connect examples") {
  const Hypergraph3 k10 = complete(10);
  const auto p = connect(k10, {0, 1, 2}, {3, 4, 5}, VertexSet(10), 12);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(connect(k10, {0, 1, 2}, {3, 4, 5}, VertexSet(10, {3}), 12), ArgumentError);
  CHECK_FALSE(connect(two_blocks(), {0, 1, 2}, {5, 6, 7}, VertexSet(10), 12));
  CHECK_THROWS_AS(connect(k10, {0, 1, 2}, {2, 4, 5}, VertexSet(10), 12), ArgumentError);
  CHECK_THROWS_AS(connect(k10.without(std::vector<Triple>{{0, 1, 2}}), {0, 1, 2}, {3, 4, 5}, VertexSet(10), 12),
                  ArgumentError);
}

TEST_CASE("connect needs interior when ends do not glue") {
  // Remove the triples that would let 0 1 2 | 3 4 5 glue directly.
  const Hypergraph3 h = complete(9).without(std::vector<Triple>{{1, 2, 3}, {0, 2, 3}});
  const auto p = connect(h, {0, 1, 2}, {3, 4, 5}, VertexSet(9), 12);
  REQUIRE(p);
  CHECK(p->size() > 6);
  check_connection(h, *p, {0, 1, 2}, {3, 4, 5}, VertexSet(9), 12);
  // cap_m = 1 allows no interior at all.
  CHECK_FALSE(connect(h, {0, 1, 2}, {3, 4, 5}, VertexSet(9), 1));
}

TEST_CASE("count connections") {
  const Hypergraph3 k8 = complete(8);
  CHECK(count_connections(k8, {0, 1, 2}, {3, 4, 5}, 0) == 1);
  CHECK(count_connections(k8, {0, 1, 2}, {3, 4, 5}, 1) == 2);
  CHECK(count_connections(k8, {0, 1, 2}, {3, 4, 5}, 2) == 2);
  for (int m = 0; m < 3; ++m) CHECK(count_connections(two_blocks(), {0, 1, 2}, {5, 6, 7}, m) == 0);
  CHECK_THROWS_AS(count_connections(complete(40), {0, 1, 2}, {3, 4, 5}, 6), ResourceError);
}

TEST_CASE("connect against brute force") {
  std::mt19937_64 rng(31);
  int found = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 7 + static_cast<int>(rng() % 3);
    const Hypergraph3 h = random_hypergraph(n, 0.7 + 0.1 * static_cast<double>(rng() % 3), rng());
    const ref::EdgeSet e(h);
    if (h.edge_count() < 2) continue;
    const Triple abc = h.edges()[rng() % h.edge_count()];
    const Triple xyz = h.edges()[rng() % h.edge_count()];
    if (!ref::distinct({abc[0], abc[1], abc[2], xyz[0], xyz[1], xyz[2]})) continue;
    for (int m = 0; m <= n - 6; ++m)
      CHECK(count_connections(h, abc, xyz, m) == ref::connections(e, abc, xyz, m));
    const auto p = connect(h, abc, xyz, VertexSet(n), n);
    int best = -1;
    for (int m = 0; m <= n - 6 && best < 0; ++m)
      if (ref::connections(e, abc, xyz, m) > 0) best = m;
    CHECK(p.has_value() == (best >= 0));
    if (p) {
      ++found;
      check_connection(h, *p, abc, xyz, VertexSet(n), n);
      CHECK(static_cast<int>(p->size()) - 6 == best);
    }
  }
  CHECK(found > 15);
}

TEST_CASE("reservoir probability and sampling") {
  Config c;
  c.theta_star = 0.1;
  c.cap_m = 10;
  CHECK(reservoir_inclusion_probability(c) == doctest::Approx(0.0097).epsilon(1e-12));
  c = Config{};
  c.theta_star = 0.0;
  CHECK(sample_reservoir(complete(20), c).members.empty());

  c = Config{};
  c.theta_star = 0.4;
  c.seed = 77;
  const Hypergraph3 h = complete(200);
  const Reservoir a = sample_reservoir(h, c);
  const Reservoir b = sample_reservoir(h, c);
  CHECK(a.members == b.members);
  CHECK(a.used.empty());
  CHECK(a.members.count() <= static_cast<int>(0.16 * 200));
  CHECK(a.members.count() > 0);
}

TEST_CASE("connect through reservoir") {
  const Hypergraph3 k30 = complete(30);
  Reservoir r{VertexSet(30), VertexSet(30)};
  for (int v = 20; v < 30; ++v) r.members.insert(v);
  const auto p = connect_through_reservoir(k30, r, {0, 1, 2}, {3, 4, 5}, 12);
  REQUIRE(p);
  for (std::size_t i = 3; i + 3 < p->size(); ++i) CHECK(r.members.contains(p->vertices[i]));

  // Interior forced: ends only glue through a reservoir vertex.
  const Hypergraph3 h = complete(12).without(std::vector<Triple>{{1, 2, 3}, {0, 2, 3}});
  Reservoir r2{VertexSet(12, {9, 10, 11}), VertexSet(12)};
  const auto q = connect_through_reservoir(h, r2, {0, 1, 2}, {3, 4, 5}, 12);
  REQUIRE(q);
  const int interior = static_cast<int>(q->size()) - 6;
  CHECK(interior > 0);
  CHECK(r2.used.count() == interior);
  for (std::size_t i = 3; i + 3 < q->size(); ++i) CHECK(r2.used.contains(q->vertices[i]));
  CHECK(r2.used.is_subset_of(r2.members));

  // Fully used reservoir: only the direct concatenation remains.
  Reservoir spent{VertexSet(12, {9, 10, 11}), VertexSet(12, {9, 10, 11})};
  CHECK_FALSE(connect_through_reservoir(h, spent, {0, 1, 2}, {3, 4, 5}, 12));
  const auto direct = connect_through_reservoir(complete(12), spent, {0, 1, 2}, {3, 4, 5}, 12);
  REQUIRE(direct);
  CHECK(direct->size() == 6);
}

TEST_CASE("connections on dense instances stay short") {
  const Hypergraph3 h = dense_random(30, 0.85, 5);
  std::mt19937_64 rng(6);
  int done = 0;
  while (done < 20) {
    const Triple abc = h.edges()[rng() % h.edge_count()];
    const Triple xyz = h.edges()[rng() % h.edge_count()];
    if (!ref::distinct({abc[0], abc[1], abc[2], xyz[0], xyz[1], xyz[2]})) continue;
    ++done;
    const auto p = connect(h, abc, xyz, VertexSet(30), 12);
    REQUIRE(p);
    check_connection(h, *p, abc, xyz, VertexSet(30), 12);
    CHECK(p->size() <= 10);
  }
}
