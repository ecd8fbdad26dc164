#include "hypersquare/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hypersquare/errors.hpp"

namespace hypersquare {

namespace {

void check_vertex(const Hypergraph3& h, int v) {
  if (v < 0 || v >= h.n())
    throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(h.n()) + ")");
}

}  // namespace

Triple make_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2])
    throw ArgumentError("triple has repeated vertex");
  return t;
}

Hypergraph3::Hypergraph3(int n, std::vector<Triple> edges)
    : n_(n), words_(words_for(n)), edges_(std::move(edges)) {
  if (n < 0) throw ArgumentError("negative vertex count");
  for (auto& e : edges_) {
    e = make_triple(e[0], e[1], e[2]);
    if (e[0] < 0 || e[2] >= n)
      throw ArgumentError("edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                          std::to_string(e[2]) + "} out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw ArgumentError("duplicate edge {" + std::to_string((*dup)[0]) + "," +
                        std::to_string((*dup)[1]) + "," + std::to_string((*dup)[2]) + "}");

  pairs_.assign(static_cast<std::size_t>(n) * n * words_, 0);
  auto set = [&](int u, int v, int w) {
    pairs_[(static_cast<std::size_t>(u) * n_ + v) * words_ + (w >> 6)] |= std::uint64_t{1}
                                                                            << (w & 63);
  };
  for (const auto& [a, b, c] : edges_) {
    set(a, b, c), set(b, a, c);
    set(a, c, b), set(c, a, b);
    set(b, c, a), set(c, b, a);
  }
}

bool Hypergraph3::has_edge(int a, int b, int c) const noexcept {
  if (a < 0 || b < 0 || c < 0 || a >= n_ || b >= n_ || c >= n_) return false;
  if (a == b || a == c || b == c) return false;
  return (pair_words(a, b)[c >> 6] >> (c & 63)) & 1u;
}

VertexSet Hypergraph3::pair_neighbors(int u, int v) const {
  return VertexSet::from_words(n_, pair_words(u, v));
}

Hypergraph3 Hypergraph3::without(std::span<const Triple> drop) const {
  std::vector<Triple> sorted_drop;
  for (const auto& t : drop) sorted_drop.push_back(make_triple(t[0], t[1], t[2]));
  std::sort(sorted_drop.begin(), sorted_drop.end());
  std::vector<Triple> kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), sorted_drop.begin(), sorted_drop.end(),
                      std::back_inserter(kept));
  return Hypergraph3(n_, std::move(kept));
}

Hypergraph3 Hypergraph3::restricted_to(const VertexSet& keep) const {
  std::vector<Triple> kept;
  for (const auto& e : edges_)
    if (keep.contains(e[0]) && keep.contains(e[1]) && keep.contains(e[2])) kept.push_back(e);
  return Hypergraph3(n_, std::move(kept));
}

int pair_degree(const Hypergraph3& h, int u, int v) {
  check_vertex(h, u);
  check_vertex(h, v);
  if (u == v) throw ArgumentError("pair_degree needs distinct vertices");
  int c = 0;
  for (auto w : h.pair_words(u, v)) c += std::popcount(w);
  return c;
}

int min_pair_degree(const Hypergraph3& h) {
  if (h.n() < 2) throw ArgumentError("min_pair_degree needs n >= 2");
  int best = h.n();
  for (int u = 0; u < h.n(); ++u)
    for (int v = u + 1; v < h.n(); ++v) best = std::min(best, pair_degree(h, u, v));
  return best;
}

int vertex_degree(const Hypergraph3& h, int v) {
  check_vertex(h, v);
  int twice = 0;
  for (int u = 0; u < h.n(); ++u)
    if (u != v) twice += pair_degree(h, u, v);
  return twice / 2;
}

AuxGraph link_graph(const Hypergraph3& h, int v) {
  check_vertex(h, v);
  AuxGraph g(h.n(), VertexSet::all(h.n()));
  for (const auto& [a, b, c] : h.edges()) {
    if (a == v) g.add_edge(b, c);
    else if (b == v) g.add_edge(a, c);
    else if (c == v) g.add_edge(a, b);
  }
  return g;
}

VertexSet joint_neighborhood3(const Hypergraph3& h, int a, int b, int c) {
  check_vertex(h, a);
  check_vertex(h, b);
  check_vertex(h, c);
  if (a == b || a == c || b == c) throw ArgumentError("joint_neighborhood3 needs distinct vertices");
  VertexSet s = VertexSet::from_words(h.n(), h.pair_words(a, b));
  s.intersect_words(h.pair_words(a, c)).intersect_words(h.pair_words(b, c));
  // a, b, c never lie in their own pair neighbourhoods, so nothing to remove.
  return s;
}

bool is_k4(const Hypergraph3& h, int w, int x, int y, int z) noexcept {
  return h.has_edge(w, x, y) && h.has_edge(w, x, z) && h.has_edge(w, y, z) &&
         h.has_edge(x, y, z);
}

std::vector<std::array<int, 4>> enumerate_k4s(const Hypergraph3& h) {
  std::vector<std::array<int, 4>> out;
  for (const auto& [a, b, c] : h.edges()) {
    VertexSet j = joint_neighborhood3(h, a, b, c);
    for (int d = j.next(c); d != -1; d = j.next(d)) out.push_back({a, b, c, d});
  }
  return out;
}

}  // namespace hypersquare
