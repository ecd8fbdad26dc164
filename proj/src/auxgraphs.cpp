#include "hypersquare/auxgraphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "hypersquare/config.hpp"
#include "hypersquare/errors.hpp"

namespace hypersquare {

namespace {

void require_fraction(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) throw ArgumentError(std::string(name) + " must lie in (0,1)");
}

using CountMatrix = std::vector<std::int64_t>;

AuxGraph threshold_graph(int n, VertexSet vertices, const CountMatrix& cnt, double threshold) {
  AuxGraph g(n, std::move(vertices));
  const auto vs = g.vertices().to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (static_cast<double>(cnt[static_cast<std::size_t>(vs[i]) * n + vs[j]]) >= threshold)
        g.add_edge(vs[i], vs[j]);
  return g;
}

}  // namespace

AuxGraph build_g3(const Hypergraph3& h, double beta) {
  require_fraction(beta, "beta");
  const int n = h.n();
  CountMatrix cnt(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [a, b, c] : h.edges()) {
    const auto j = joint_neighborhood3(h, a, b, c).to_vector();
    for (std::size_t i = 0; i < j.size(); ++i)
      for (std::size_t k = i + 1; k < j.size(); ++k)
        cnt[static_cast<std::size_t>(j[i]) * n + j[k]] += 6;
  }
  const double nn = n;
  return threshold_graph(n, VertexSet::all(n), cnt, beta * nn * nn * nn);
}

AuxGraph build_gv(const Hypergraph3& h, int v, double beta) {
  if (v < 0 || v >= h.n()) throw ArgumentError("vertex out of range");
  require_fraction(beta, "beta");
  const int n = h.n();
  CountMatrix cnt(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (a == v) continue;
    const VertexSet nav = h.pair_neighbors(a, v);
    for (int b = nav.next(a); b != -1; b = nav.next(b)) {
      const auto j = joint_neighborhood3(h, a, b, v).to_vector();
      for (std::size_t i = 0; i < j.size(); ++i)
        for (std::size_t k = i + 1; k < j.size(); ++k)
          cnt[static_cast<std::size_t>(j[i]) * n + j[k]] += 2;
    }
  }
  VertexSet rest = VertexSet::all(n);
  rest.erase(v);
  const double nn = n;
  return threshold_graph(n, std::move(rest), cnt, beta * nn * nn);
}

AuxGraph build_gvw(const Hypergraph3& h, int v, int w) {
  if (v < 0 || w < 0 || v >= h.n() || w >= h.n()) throw ArgumentError("vertex out of range");
  if (v == w) throw ArgumentError("build_gvw needs v != w");
  AuxGraph g(h.n(), h.pair_neighbors(v, w));
  const auto vs = g.vertices().to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (h.has_edge(vs[i], vs[j], v) && h.has_edge(vs[i], vs[j], w)) g.add_edge(vs[i], vs[j]);
  return g;
}

WalkCountTable walk_counts(const AuxGraph& g, int source, int s) {
  if (!g.vertices().contains(source)) throw ArgumentError("walk source outside the graph");
  if (s < 0) throw ArgumentError("walk length must be non-negative");
  const auto n = static_cast<std::size_t>(g.universe());
  std::vector<std::uint64_t> cur(n, 0), nxt(n, 0);
  cur[static_cast<std::size_t>(source)] = 1;
  for (int step = 0; step < s; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    g.vertices().for_each([&](int u) {
      std::uint64_t sum = 0;
      g.neighbors(u).for_each([&](int w) { sum += cur[static_cast<std::size_t>(w)]; });
      nxt[static_cast<std::size_t>(u)] = sum;
    });
    std::swap(cur, nxt);
  }
  return {source, s, std::move(cur)};
}

std::uint64_t count_walks(const AuxGraph& g, int x, int y, int s) {
  if (!g.vertices().contains(y)) throw ArgumentError("walk target outside the graph");
  return walk_counts(g, x, s).counts[static_cast<std::size_t>(y)];
}

ExpansionReport expansion_report(const AuxGraph& g, double gamma, int effort, std::uint64_t seed) {
  require_fraction(gamma, "gamma");
  ExpansionReport rep;
  const auto vs = g.vertices().to_vector();
  const int m = static_cast<int>(vs.size());
  const double root = std::sqrt(gamma) * m;
  rep.min_side = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(root - 1e-12)));
  rep.required_crossing = gamma * m * m;
  rep.min_degree = g.min_degree();
  rep.degree_ok = rep.min_degree >= root;
  rep.exhaustive = m <= 20;

  // Local indices 0..m-1.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(m), 0);
  std::vector<int> local(static_cast<std::size_t>(g.universe()), -1);
  for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(vs[i])] = i;
  for (int i = 0; i < m; ++i)
    g.neighbors(vs[i]).for_each([&](int w) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j < 0) return;
      adj[static_cast<std::size_t>(i)].push_back(j);
      if (m <= 32) adj_mask[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    });

  const auto admissible = [&](std::int64_t size_x) {
    return size_x >= rep.min_side && m - size_x >= rep.min_side && size_x > 0 && size_x < m;
  };
  auto record = [&](std::int64_t cut, const std::vector<char>& in_x) {
    if (rep.best_crossing >= 0 && cut >= rep.best_crossing) return;
    rep.best_crossing = cut;
    rep.side_x.clear();
    for (int i = 0; i < m; ++i)
      if (in_x[static_cast<std::size_t>(i)]) rep.side_x.push_back(vs[i]);
  };

  if (rep.exhaustive) {
    if (m >= 2) {
      const std::uint32_t full = (m == 32) ? ~0u : ((std::uint32_t{1} << m) - 1);
      // Vertex 0 is fixed on the X side; each partition is visited once.
      for (std::uint32_t rest = 0; rest < (std::uint32_t{1} << (m - 1)); ++rest) {
        const std::uint32_t x = (rest << 1) | 1u;
        if (!admissible(std::popcount(x))) continue;
        std::int64_t cut = 0;
        for (std::uint32_t bits = x; bits; bits &= bits - 1)
          cut += std::popcount(adj_mask[static_cast<std::size_t>(std::countr_zero(bits))] & ~x & full);
        if (rep.best_crossing < 0 || cut < rep.best_crossing) {
          std::vector<char> in_x(static_cast<std::size_t>(m), 0);
          for (int i = 0; i < m; ++i) in_x[static_cast<std::size_t>(i)] = (x >> i) & 1u;
          record(cut, in_x);
        }
      }
    }
  } else {
    const std::int64_t lo = std::max<std::int64_t>(rep.min_side, 1);
    const std::int64_t hi = m - lo;
    for (int restart = 0; restart < effort && lo <= hi; ++restart) {
      std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
      std::uniform_int_distribution<std::int64_t> size_pick(lo, hi);
      const std::int64_t size_x = size_pick(rng);
      std::vector<int> order(static_cast<std::size_t>(m));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<char> in_x(static_cast<std::size_t>(m), 0);
      for (std::int64_t i = 0; i < size_x; ++i) in_x[static_cast<std::size_t>(order[i])] = 1;
      std::int64_t count_x = size_x;

      // gain[i]: cut reduction when i switches sides.
      auto gain = [&](int i) {
        int same = 0, other = 0;
        for (int j : adj[static_cast<std::size_t>(i)])
          (in_x[static_cast<std::size_t>(j)] == in_x[static_cast<std::size_t>(i)] ? same : other)++;
        return other - same;
      };
      bool improved = true;
      while (improved) {
        improved = false;
        for (int i = 0; i < m; ++i) {
          const std::int64_t new_count = count_x + (in_x[static_cast<std::size_t>(i)] ? -1 : 1);
          if (!admissible(new_count) || gain(i) <= 0) continue;
          in_x[static_cast<std::size_t>(i)] ^= 1;
          count_x = new_count;
          improved = true;
        }
      }
      std::int64_t cut = 0;
      for (int i = 0; i < m; ++i)
        if (in_x[static_cast<std::size_t>(i)])
          for (int j : adj[static_cast<std::size_t>(i)]) cut += !in_x[static_cast<std::size_t>(j)];
      record(cut, in_x);
    }
  }
  rep.violation = rep.best_crossing >= 0 && static_cast<double>(rep.best_crossing) < rep.required_crossing;
  return rep;
}

}  // namespace hypersquare
