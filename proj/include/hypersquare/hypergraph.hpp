#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hypersquare/aux_graph.hpp"
#include "hypersquare/vertex_set.hpp"

namespace hypersquare {

/// Unordered vertex triple, stored sorted ascending.
using Triple = std::array<int, 3>;

/// Sorts the three entries; throws ArgumentError on repeats.
Triple make_triple(int a, int b, int c);

/// 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept twice: as a sorted list of sorted triples and as a table of
/// per-pair neighbour bitsets N(u,v) = {w : uvw in E}. Membership tests and
/// joint neighbourhoods are therefore bitwise operations on the pair table.
/// Immutable after construction.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  /// Throws ArgumentError on out-of-range, repeated, or duplicate triples.
  Hypergraph3(int n, std::vector<Triple> edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted lexicographically; each triple sorted ascending.
  const std::vector<Triple>& edges() const noexcept { return edges_; }

  /// False for repeated or out-of-range vertices.
  bool has_edge(int a, int b, int c) const noexcept;

  /// Raw words of N(u,v). Requires u != v, both in range.
  std::span<const std::uint64_t> pair_words(int u, int v) const noexcept {
    const auto w = static_cast<std::size_t>(words_);
    return {pairs_.data() + (static_cast<std::size_t>(u) * n_ + v) * w, w};
  }
  VertexSet pair_neighbors(int u, int v) const;

  /// Copy without the listed triples (missing ones are ignored).
  Hypergraph3 without(std::span<const Triple> drop) const;
  /// Induced sub-hypergraph on `keep`, vertex ids unchanged.
  Hypergraph3 restricted_to(const VertexSet& keep) const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::uint64_t> pairs_;
};

/// |N(u,v)|. Throws ArgumentError if u == v or out of range.
int pair_degree(const Hypergraph3& h, int u, int v);
/// Minimum of pair_degree over unordered pairs. Throws ArgumentError if n < 2.
int min_pair_degree(const Hypergraph3& h);
/// Number of edges containing v.
int vertex_degree(const Hypergraph3& h, int v);
/// Graph on all n vertices with ab an edge iff vab is a hyperedge.
AuxGraph link_graph(const Hypergraph3& h, int v);
/// N(a,b) & N(a,c) & N(b,c), minus {a,b,c}. Throws ArgumentError on repeats.
VertexSet joint_neighborhood3(const Hypergraph3& h, int a, int b, int c);
/// True iff w,x,y,z are distinct and all four triples are edges.
bool is_k4(const Hypergraph3& h, int w, int x, int y, int z) noexcept;

/// All tetrahedra as sorted 4-tuples, lexicographic order.
std::vector<std::array<int, 4>> enumerate_k4s(const Hypergraph3& h);

}  // namespace hypersquare
