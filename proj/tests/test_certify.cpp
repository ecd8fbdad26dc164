#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypersquare/certify.hpp"
#include "hypersquare/errors.hpp"
#include "hypersquare/generators.hpp"
#include "oracles.hpp"

using namespace hypersquare;

namespace {

VertexSeq open(std::vector<int> v) { return {std::move(v), false}; }
VertexSeq closed(std::vector<int> v) { return {std::move(v), true}; }

}  // namespace

TEST_CASE("squared path examples") {
  CHECK(is_squared_path(complete(6), open({0, 1, 2, 3, 4, 5})));
  CHECK_FALSE(is_squared_path(complete(6).without(std::vector<Triple>{{2, 3, 4}}), open({0, 1, 2, 3, 4, 5})));
  const Hypergraph3 one(3, {{0, 1, 2}});
  CHECK(is_squared_path(one, open({0, 1, 2})));
  CHECK_FALSE(is_squared_path(Hypergraph3(3, {}), open({0, 1, 2})));
  CHECK_FALSE(is_squared_path(complete(6), open({0, 1, 2, 1})));
  CHECK_THROWS_AS(is_squared_path(complete(6), open({0, 1})), ArgumentError);
  CHECK_THROWS_AS(is_squared_path(complete(6), closed({0, 1, 2, 3, 4})), ArgumentError);
}

TEST_CASE("squared cycle examples") {
  CHECK(is_squared_cycle(complete(5), closed({0, 1, 2, 3, 4})));
  CHECK_FALSE(is_squared_cycle(complete(5).without(std::vector<Triple>{{0, 1, 4}}), closed({0, 1, 2, 3, 4})));
  CHECK_THROWS_AS(is_squared_cycle(complete(4), closed({0, 1, 2, 3})), ArgumentError);
  CHECK_THROWS_AS(is_squared_cycle(complete(5), open({0, 1, 2, 3, 4})), ArgumentError);
  CHECK_FALSE(is_squared_cycle(complete(6), closed({0, 1, 2, 3, 0})));
}

TEST_CASE("squared walk examples") {
  CHECK(is_squared_walk(complete(6), open({0, 1, 2, 3, 0, 4, 5})));
  CHECK_FALSE(is_squared_walk(complete(6), open({0, 1, 2, 0, 3, 4})));
  CHECK(is_squared_walk(complete(6), open({5, 3, 1, 0, 2, 4})));
  CHECK_THROWS_AS(is_squared_walk(complete(6), open({0, 1})), ArgumentError);
}

TEST_CASE("squared v-walk examples") {
  const Hypergraph3 k8 = complete(8);
  CHECK(is_squared_v_walk(k8, 7, {0, 1, 2}, {3, 4, 5}, {}));
  CHECK_FALSE(is_squared_v_walk(k8.without(std::vector<Triple>{{2, 3, 7}}), 7, {0, 1, 2}, {3, 4, 5}, {}));
  const std::vector<int> bad{7};
  CHECK_THROWS_AS(is_squared_v_walk(k8, 7, {0, 1, 2}, {3, 4, 5}, bad), PreconditionError);
  CHECK_THROWS_AS(is_squared_v_walk(k8.without(std::vector<Triple>{{0, 1, 2}}), 7, {0, 1, 2}, {3, 4, 5}, {}),
                  PreconditionError);
}

TEST_CASE("absorber examples") {
  const Hypergraph3 k8 = complete(8);
  CHECK(is_v_absorber(k8, 7, {0, 1, 2, 3, 4, 5}));
  CHECK_FALSE(is_v_absorber(k8.without(std::vector<Triple>{{2, 3, 7}}), 7, {0, 1, 2, 3, 4, 5}));
  CHECK_FALSE(is_v_absorber(k8, 7, {0, 1, 2, 3, 4, 0}));
  CHECK_FALSE(is_v_absorber(k8, 5, {0, 1, 2, 3, 4, 5}));
}

TEST_CASE("hamiltonian certificate examples") {
  CHECK(certify_hamiltonian(complete(6), closed({0, 1, 2, 3, 4, 5})));
  CHECK_FALSE(certify_hamiltonian(complete(6), closed({0, 1, 2, 3, 4})));
  const Hypergraph3 p8 = pikhurko(8).hypergraph;
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7};
  do {
    REQUIRE_FALSE(certify_hamiltonian(p8, closed(perm)));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

TEST_CASE("predicates agree with brute force on small random instances") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const Hypergraph3 h = random_hypergraph(n, 0.6 + 0.4 * ((rng() % 5) / 4.0), rng());
    const ref::EdgeSet e(h);
    const std::size_t len = 3 + rng() % static_cast<std::size_t>(n - 2);
    std::vector<int> s(len);
    for (auto& v : s) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (rng() % 2) {  // bias towards distinct sequences
      std::vector<int> p(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
      std::shuffle(p.begin(), p.end(), rng);
      s.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len));
    }
    CHECK(is_squared_path(h, open(s)) == ref::squared_path(e, s));
    if (len >= 5) CHECK(is_squared_cycle(h, closed(s)) == ref::squared_cycle(e, s));
    if (len == 6) {
      const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      std::array<int, 6> t;
      std::copy(s.begin(), s.end(), t.begin());
      CHECK(is_v_absorber(h, v, t) == ref::v_absorber(e, v, t));
    }
  }
}

TEST_CASE("symmetries of accepted sequences") {
  std::mt19937_64 rng(4);
  int accepted = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const Hypergraph3 h = random_hypergraph(8, 0.9, rng());
    std::vector<int> p{0, 1, 2, 3, 4, 5, 6, 7};
    std::shuffle(p.begin(), p.end(), rng);
    const VertexSeq s = open(p);
    const bool path = is_squared_path(h, s);
    CHECK(is_squared_path(h, open({p.rbegin(), p.rend()})) == path);
    const bool cyc = is_squared_cycle(h, closed(p));
    for (std::size_t k = 1; k < p.size(); ++k) {
      std::vector<int> r = p;
      std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
      CHECK(is_squared_cycle(h, closed(r)) == cyc);
    }
    if (!path) continue;
    ++accepted;
    CHECK(is_squared_walk(h, s));
    for (std::size_t i = 0; i + 3 < p.size(); ++i) CHECK(is_k4(h, p[i], p[i + 1], p[i + 2], p[i + 3]));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 3; b <= p.size(); ++b)
        CHECK(is_squared_path(h, open({p.begin() + static_cast<std::ptrdiff_t>(a), p.begin() + static_cast<std::ptrdiff_t>(b)})));
  }
  CHECK(accepted > 0);
}

TEST_CASE("absorber insertion keeps a path valid") {
  std::mt19937_64 rng(8);
  int tried = 0;
  for (int iter = 0; iter < 2000 && tried < 50; ++iter) {
    const Hypergraph3 h = random_hypergraph(10, 0.95, rng());
    std::vector<int> p{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(p.begin(), p.end(), rng);
    const int v = p.back();
    p.pop_back();
    if (!is_squared_path(h, open(p))) continue;
    for (std::size_t i = 0; i + 6 <= p.size(); ++i) {
      std::array<int, 6> t;
      std::copy_n(p.begin() + static_cast<std::ptrdiff_t>(i), 6, t.begin());
      if (!is_v_absorber(h, v, t)) continue;
      ++tried;
      std::vector<int> q = p;
      q.insert(q.begin() + static_cast<std::ptrdiff_t>(i + 3), v);
      const VertexSeq after = open(q);
      CHECK(is_squared_path(h, after));
      CHECK(after.front_triple() == open(p).front_triple());
      CHECK(after.back_triple() == open(p).back_triple());
    }
  }
  CHECK(tried > 0);
}
