#pragma once

#include <utility>
#include <vector>

#include "hypersquare/vertex_set.hpp"

namespace hypersquare {

/// Simple undirected graph on a subset of 0..n-1.
class AuxGraph {
 public:
  AuxGraph() = default;
  AuxGraph(int n, VertexSet vertices);

  int universe() const noexcept { return vertices_.universe(); }
  const VertexSet& vertices() const noexcept { return vertices_; }
  int order() const noexcept { return vertices_.count(); }

  /// Throws ArgumentError for loops or endpoints outside vertices().
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const noexcept;
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbors(v).count(); }
  /// Minimum degree over vertices(); 0 for an empty vertex set.
  int min_degree() const;
  std::size_t edge_count() const;
  /// Edges as (u,v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

 private:
  VertexSet vertices_;
  std::vector<VertexSet> adj_;
};

}  // namespace hypersquare
