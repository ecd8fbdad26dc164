#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "hypersquare/config.hpp"
#include "hypersquare/errors.hpp"
#include "hypersquare/generators.hpp"
#include "hypersquare/hypergraph.hpp"
#include "hypersquare/text_io.hpp"
#include "oracles.hpp"

using namespace hypersquare;

namespace {

Hypergraph3 complete_minus(int n, std::vector<Triple> drop) { return complete(n).without(drop); }

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(130, {0, 5, 64, 129});
  CHECK(s.count() == 4);
  CHECK(s.first() == 0);
  CHECK(s.next(5) == 64);
  CHECK(s.next(129) == -1);
  CHECK(s.to_vector() == std::vector<int>{0, 5, 64, 129});
  const VertexSet c = s.complement();
  CHECK(c.count() == 126);
  CHECK_FALSE(c.intersects(s));
  CHECK((c | s) == VertexSet::all(130));
  CHECK((VertexSet::all(130) - s) == c);
  CHECK(s.is_subset_of(VertexSet::all(130)));
  CHECK(VertexSet(7).empty());
  CHECK(VertexSet(7).first() == -1);
}

TEST_CASE("pair degree") {
  CHECK(pair_degree(complete(5), 0, 1) == 3);
  const Hypergraph3 empty(6, {});
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) CHECK(pair_degree(empty, u, v) == 0);
  CHECK_THROWS_AS(pair_degree(complete(5), 2, 2), ArgumentError);
  CHECK_THROWS_AS(pair_degree(complete(5), 0, 5), ArgumentError);
  CHECK_THROWS_AS(pair_degree(complete(5), -1, 2), ArgumentError);
}

TEST_CASE("min pair degree") {
  CHECK(min_pair_degree(complete(7)) == 5);
  CHECK(min_pair_degree(complete_minus(7, {{0, 1, 2}})) == 4);
  CHECK_THROWS_AS(min_pair_degree(Hypergraph3(1, {})), ArgumentError);
  // Measured on the four-part construction, cross-checked by brute force.
  for (int n : {8, 12, 16}) {
    const Hypergraph3 h = pikhurko(n).hypergraph;
    CHECK(min_pair_degree(h) == ref::min_pair_degree(ref::EdgeSet(h)));
    CHECK(min_pair_degree(h) == 3 * n / 4 - 2);
  }
}

TEST_CASE("vertex degree") {
  CHECK(vertex_degree(complete(5), 0) == 6);
  CHECK(vertex_degree(Hypergraph3(5, {}), 3) == 0);
  CHECK(vertex_degree(random_hypergraph(8, 1.0, 1), 3) == 21);
  CHECK_THROWS_AS(vertex_degree(complete(5), 5), ArgumentError);
}

TEST_CASE("link graph") {
  const AuxGraph g = link_graph(complete(5), 0);
  CHECK(g.edge_count() == 6);
  CHECK(g.degree(0) == 0);
  for (int a = 1; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) CHECK(g.has_edge(a, b));
  CHECK(link_graph(Hypergraph3(6, {}), 2).edge_count() == 0);
  const AuxGraph one = link_graph(Hypergraph3(3, {{0, 1, 2}}), 0);
  CHECK(one.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS(link_graph(complete(5), 7), ArgumentError);
}

TEST_CASE("joint neighbourhood") {
  CHECK(joint_neighborhood3(complete(6), 0, 1, 2).to_vector() == std::vector<int>{3, 4, 5});
  CHECK(joint_neighborhood3(complete_minus(6, {{0, 1, 5}}), 0, 1, 2).to_vector() == std::vector<int>{3, 4});
  CHECK(joint_neighborhood3(Hypergraph3(6, {}), 0, 1, 2).empty());
  CHECK_THROWS_AS(joint_neighborhood3(complete(6), 0, 1, 1), ArgumentError);
}

TEST_CASE("tetrahedra") {
  CHECK(is_k4(complete(4), 0, 1, 2, 3));
  CHECK_FALSE(is_k4(complete_minus(4, {{0, 1, 2}}), 0, 1, 2, 3));
  CHECK_FALSE(is_k4(complete(4), 0, 0, 1, 2));
  CHECK(enumerate_k4s(complete(6)).size() == 15);
}

TEST_CASE("hypergraph construction rejects bad edges") {
  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 4}}), ArgumentError);
  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 2}, {2, 1, 0}}), ArgumentError);
  CHECK_THROWS_AS(make_triple(1, 1, 2), ArgumentError);
}

TEST_CASE("degree identities and pair table on random hypergraphs") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const double p = (rng() % 100) / 100.0;
    const Hypergraph3 h = random_hypergraph(n, p, rng());
    const ref::EdgeSet e(h);
    int sum = 0, pairs = 0;
    for (int v = 0; v < n; ++v) {
      sum += vertex_degree(h, v);
      int s = 0;
      for (int u = 0; u < n; ++u)
        if (u != v) s += pair_degree(h, u, v);
      CHECK(2 * vertex_degree(h, v) == s);
      CHECK(link_graph(h, v).edge_count() == static_cast<std::size_t>(vertex_degree(h, v)));
    }
    CHECK(sum == 3 * static_cast<int>(h.edge_count()));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        pairs += pair_degree(h, u, v);
        for (int w = 0; w < n; ++w) CHECK(h.pair_neighbors(u, v).contains(w) == e.has(u, v, w));
      }
    CHECK(pairs == 3 * static_cast<int>(h.edge_count()));
    // Rebuilding from the edge list reproduces the pair table.
    const Hypergraph3 again(n, h.edges());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) CHECK(std::ranges::equal(again.pair_words(u, v), h.pair_words(u, v)));
  }
}

TEST_CASE("is_k4 is symmetric") {
  std::mt19937_64 rng(9);
  const Hypergraph3 h = random_hypergraph(7, 0.8, 3);
  for (int iter = 0; iter < 40; ++iter) {
    std::array<int, 4> q{};
    for (auto& x : q) x = static_cast<int>(rng() % 7);
    const bool base = is_k4(h, q[0], q[1], q[2], q[3]);
    std::sort(q.begin(), q.end());
    do {
      CHECK(is_k4(h, q[0], q[1], q[2], q[3]) == base);
    } while (std::next_permutation(q.begin(), q.end()));
  }
}

TEST_CASE("config validation") {
  Config c;
  CHECK_NOTHROW(c.validate());
  c.beta = c.alpha / 8;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = Config{};
  c.q = 6;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = Config{};
  c.cap_m = 0;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = Config{};
  c.alpha = 1.0;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = Config{};
  c.theta_star = 0.0;
  CHECK_NOTHROW(c.validate());
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("text format round trip") {
  const Hypergraph3 h = random_hypergraph(9, 0.4, 17);
  std::stringstream buf;
  write_hypergraph(buf, h);
  const Hypergraph3 back = read_hypergraph(buf);
  CHECK(back.n() == h.n());
  CHECK(back.edges() == h.edges());

  std::istringstream with_comments("# header\nn 4\n\n# edge\n0 1 2\n1 2 3\n");
  CHECK(read_hypergraph(with_comments).edge_count() == 2);
}

TEST_CASE("text format errors name the line") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_hypergraph(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("n 4\n0 1 2\n0 1 2\n") == 3);
  CHECK(line_of("n 4\n0 1 4\n") == 2);
  CHECK(line_of("n 4\n2 1 0\n") == 2);
  CHECK(line_of("n 4\n0 1\n") == 2);
  CHECK(line_of("# c\nfoo\n") == 2);
  CHECK(line_of("n 4\n0 1 x\n") == 2);
  CHECK(line_of("") == 1);
}

TEST_CASE("sequence format") {
  const VertexSeq c = parse_sequence("C 0 1 2 3 4");
  CHECK(c.closed);
  CHECK(c.vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(format_sequence(c) == "C 0 1 2 3 4");
  const VertexSeq p = parse_sequence("3 1 2");
  CHECK_FALSE(p.closed);
  CHECK(format_sequence(p) == "3 1 2");
  CHECK_THROWS_AS(parse_sequence("0 a 2"), ParseError);
  CHECK_THROWS_AS(parse_sequence(""), ParseError);
}
