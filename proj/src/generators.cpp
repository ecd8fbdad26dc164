#include "hypersquare/generators.hpp"

#include <cmath>
#include <random>
#include <string>

#include "hypersquare/config.hpp"
#include "hypersquare/errors.hpp"

namespace hypersquare {

Hypergraph3 complete(int n) {
  if (n < 3) throw ArgumentError("complete needs n >= 3");
  std::vector<Triple> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) edges.push_back({a, b, c});
  return Hypergraph3(n, std::move(edges));
}

namespace {

bool pikhurko_edge(int pa, int pb, int pc) {
  std::array<int, 4> cnt{};
  ++cnt[pa], ++cnt[pb], ++cnt[pc];
  if (cnt[0] == 2) return true;
  if (cnt[0] == 1) return cnt[1] <= 1 && cnt[2] <= 1 && cnt[3] <= 1;
  if (cnt[0] == 3) return false;
  for (int i = 1; i <= 3; ++i)
    if (cnt[i] == 3) return true;
  // No A0 vertex and not inside one part: either a 2+1 split or 1+1+1.
  for (int i = 1; i <= 3; ++i)
    if (cnt[i] == 2) return true;
  return false;
}

}  // namespace

PikhurkoInstance pikhurko(int n) {
  if (n < 8) throw ArgumentError("pikhurko needs n >= 8");
  PikhurkoPartition part;
  for (int v = 0; v < n; ++v) part.parts[static_cast<std::size_t>(v % 4)].push_back(v);
  std::vector<Triple> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (pikhurko_edge(a % 4, b % 4, c % 4)) edges.push_back({a, b, c});
  return {Hypergraph3(n, std::move(edges)), std::move(part)};
}

Hypergraph3 random_hypergraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("p must lie in [0,1]");
  if (n < 0) throw ArgumentError("negative vertex count");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Triple> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (coin(rng)) edges.push_back({a, b, c});
  return Hypergraph3(n, std::move(edges));
}

Hypergraph3 repair_to_pair_degree(int n, double base_p, int required, std::uint64_t seed) {
  if (required > n - 2)
    throw ArgumentError("pair degree " + std::to_string(required) +
                        " unreachable with n = " + std::to_string(n));
  const Hypergraph3 base = random_hypergraph(n, base_p, seed);
  std::vector<VertexSet> nbr(static_cast<std::size_t>(n) * n, VertexSet(n));
  auto at = [&](int u, int v) -> VertexSet& { return nbr[static_cast<std::size_t>(u) * n + v]; };
  std::vector<Triple> edges = base.edges();
  auto add = [&](int a, int b, int c) {
    at(a, b).insert(c), at(b, a).insert(c);
    at(a, c).insert(b), at(c, a).insert(b);
    at(b, c).insert(a), at(c, b).insert(a);
  };
  for (const auto& [a, b, c] : edges) add(a, b, c);

  std::mt19937_64 rng(derive_seed(seed, 1));
  // Degrees only grow, so a single lexicographic sweep repairs the first
  // deficient pair each time.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      while (at(u, v).count() < required) {
        VertexSet missing = at(u, v).complement();
        missing.erase(u);
        missing.erase(v);
        const auto choices = missing.to_vector();
        std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
        const int w = choices[pick(rng)];
        add(u, v, w);
        edges.push_back(make_triple(u, v, w));
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

Hypergraph3 dense_random(int n, double delta2_target, std::uint64_t seed) {
  if (!(delta2_target > 0.0 && delta2_target < 1.0))
    throw ArgumentError("delta2_target must lie in (0,1)");
  const int required = static_cast<int>(std::ceil(delta2_target * n - 1e-9));
  return repair_to_pair_degree(n, delta2_target, required, seed);
}

Hypergraph3 relabel(const Hypergraph3& h, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(h.n())) throw ArgumentError("permutation size mismatch");
  std::vector<Triple> edges;
  edges.reserve(h.edge_count());
  for (const auto& [a, b, c] : h.edges()) edges.push_back(make_triple(perm[a], perm[b], perm[c]));
  return Hypergraph3(h.n(), std::move(edges));
}

}  // namespace hypersquare
