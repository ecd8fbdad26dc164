#include "hypersquare/connector.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

#include "hypersquare/errors.hpp"

namespace hypersquare {

namespace {

void check_ends(const Hypergraph3& h, const Triple& abc, const Triple& xyz) {
  if (!h.has_edge(abc[0], abc[1], abc[2])) throw ArgumentError("start triple is not an edge");
  if (!h.has_edge(xyz[0], xyz[1], xyz[2])) throw ArgumentError("end triple is not an edge");
  for (int i : abc)
    for (int j : xyz)
      if (i == j) throw ArgumentError("end triples must be disjoint");
}

bool closes(const Hypergraph3& h, int p, int q, int r, const Triple& xyz) {
  const auto [x, y, z] = xyz;
  return is_k4(h, p, q, r, x) && is_k4(h, q, r, x, y) && is_k4(h, r, x, y, z);
}

/// Vertices u that may follow state (p,q,r): u in N(p,q) & N(p,r) & N(q,r).
VertexSet successors(const Hypergraph3& h, int p, int q, int r, const VertexSet& allowed) {
  VertexSet s = allowed;
  s.intersect_words(h.pair_words(p, q)).intersect_words(h.pair_words(p, r));
  s.intersect_words(h.pair_words(q, r));
  return s;
}

std::optional<VertexSeq> search(const Hypergraph3& h, const Triple& abc, const Triple& xyz,
                                const VertexSet& allowed, int cap_m, std::int64_t budget) {
  struct Node {
    int p, q, r;
    int parent;
  };
  const auto n = static_cast<std::uint64_t>(h.n());
  auto key = [n](int p, int q, int r) {
    return (static_cast<std::uint64_t>(p) * n + static_cast<std::uint64_t>(q)) * n +
           static_cast<std::uint64_t>(r);
  };
  std::vector<Node> nodes{{abc[0], abc[1], abc[2], -1}};
  std::unordered_set<std::uint64_t> seen{key(abc[0], abc[1], abc[2])};
  std::vector<int> frontier{0};

  auto rebuild = [&](int idx) {
    std::vector<int> interior;
    for (int i = idx; nodes[static_cast<std::size_t>(i)].parent != -1;
         i = nodes[static_cast<std::size_t>(i)].parent)
      interior.push_back(nodes[static_cast<std::size_t>(i)].r);
    VertexSeq s;
    s.vertices.assign(abc.begin(), abc.end());
    s.vertices.insert(s.vertices.end(), interior.rbegin(), interior.rend());
    s.vertices.insert(s.vertices.end(), xyz.begin(), xyz.end());
    return s;
  };

  for (int depth = 0; depth < cap_m; ++depth) {
    for (int idx : frontier) {
      const Node& nd = nodes[static_cast<std::size_t>(idx)];
      if (closes(h, nd.p, nd.q, nd.r, xyz)) return rebuild(idx);
    }
    if (depth + 1 >= cap_m) break;
    std::vector<int> next;
    for (int idx : frontier) {
      if (static_cast<std::int64_t>(next.size()) >= budget) break;
      const Node nd = nodes[static_cast<std::size_t>(idx)];
      VertexSet cand = successors(h, nd.p, nd.q, nd.r, allowed);
      // Interior vertices already on this branch.
      for (int i = idx; nodes[static_cast<std::size_t>(i)].parent != -1;
           i = nodes[static_cast<std::size_t>(i)].parent)
        cand.erase(nodes[static_cast<std::size_t>(i)].r);
      for (int u = cand.first(); u != -1; u = cand.next(u)) {
        if (!seen.insert(key(nd.q, nd.r, u)).second) continue;
        nodes.push_back({nd.q, nd.r, u, idx});
        next.push_back(static_cast<int>(nodes.size()) - 1);
        if (static_cast<std::int64_t>(next.size()) >= budget) break;
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return std::nullopt;
}

VertexSet ends_set(int n, const Triple& abc, const Triple& xyz) {
  return VertexSet(n, {abc[0], abc[1], abc[2], xyz[0], xyz[1], xyz[2]});
}

}  // namespace

std::optional<VertexSeq> connect(const Hypergraph3& h, const Triple& abc, const Triple& xyz,
                                 const VertexSet& forbidden, int cap_m, std::int64_t budget) {
  check_ends(h, abc, xyz);
  const VertexSet ends = ends_set(h.n(), abc, xyz);
  if (forbidden.universe() != h.n()) throw ArgumentError("forbidden set universe mismatch");
  if (forbidden.intersects(ends)) throw ArgumentError("an end vertex is forbidden");
  if (cap_m < 1) throw ArgumentError("cap_m must be at least 1");
  return search(h, abc, xyz, VertexSet::all(h.n()) - forbidden - ends, cap_m, budget);
}

std::uint64_t count_connections(const Hypergraph3& h, const Triple& abc, const Triple& xyz, int m) {
  check_ends(h, abc, xyz);
  if (m < 0) throw ArgumentError("m must be non-negative");
  if (std::pow(static_cast<double>(h.n()), m) > 1e8)
    throw ResourceError("n^m exceeds the enumeration guard of 1e8");
  const VertexSet allowed = VertexSet::all(h.n()) - ends_set(h.n(), abc, xyz);

  std::uint64_t total = 0;
  std::vector<int> seq(abc.begin(), abc.end());
  VertexSet avail = allowed;
  auto dfs = [&](auto&& self, int left) -> void {
    const auto k = seq.size();
    const int p = seq[k - 3], q = seq[k - 2], r = seq[k - 1];
    if (left == 0) {
      total += closes(h, p, q, r, xyz);
      return;
    }
    const VertexSet cand = successors(h, p, q, r, avail);
    cand.for_each([&](int u) {
      seq.push_back(u);
      avail.erase(u);
      self(self, left - 1);
      avail.insert(u);
      seq.pop_back();
    });
  };
  dfs(dfs, m);
  return total;
}

double reservoir_inclusion_probability(const Config& cfg) {
  return (1.0 - 3.0 / (10.0 * cfg.cap_m)) * cfg.theta_star * cfg.theta_star;
}

Reservoir sample_reservoir(const Hypergraph3& h, const Config& cfg) {
  cfg.validate();
  const double p = reservoir_inclusion_probability(cfg);
  const double bound = cfg.theta_star * cfg.theta_star * h.n();
  for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
    std::mt19937_64 rng(cfg.seed + attempt);
    std::bernoulli_distribution coin(p);
    VertexSet members(h.n());
    for (int v = 0; v < h.n(); ++v)
      if (coin(rng)) members.insert(v);
    if (members.count() <= bound) return {members, VertexSet(h.n())};
  }
  throw ResourceError("reservoir exceeded theta_star^2 * n on every retry");
}

std::optional<VertexSeq> connect_through_reservoir(const Hypergraph3& h, Reservoir& r,
                                                   const Triple& abc, const Triple& xyz, int cap_m,
                                                   std::int64_t budget) {
  check_ends(h, abc, xyz);
  if (cap_m < 1) throw ArgumentError("cap_m must be at least 1");
  auto found = search(h, abc, xyz, r.available() - ends_set(h.n(), abc, xyz), cap_m, budget);
  if (found)
    for (std::size_t i = 3; i + 3 < found->size(); ++i) r.used.insert(found->vertices[i]);
  return found;
}

}  // namespace hypersquare
