#include "hypersquare/aux_graph.hpp"

#include <algorithm>
#include <string>

#include "hypersquare/errors.hpp"

namespace hypersquare {

AuxGraph::AuxGraph(int n, VertexSet vertices)
    : vertices_(std::move(vertices)), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
  if (vertices_.universe() != n) throw ArgumentError("vertex set universe mismatch");
}

void AuxGraph::add_edge(int u, int v) {
  if (u == v) throw ArgumentError("loop at vertex " + std::to_string(u));
  if (!vertices_.contains(u) || !vertices_.contains(v))
    throw ArgumentError("edge endpoint outside the vertex set");
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
}

bool AuxGraph::has_edge(int u, int v) const noexcept {
  if (u < 0 || u >= universe()) return false;
  return adj_[static_cast<std::size_t>(u)].contains(v);
}

int AuxGraph::min_degree() const {
  int best = -1;
  vertices_.for_each([&](int v) {
    const int d = degree(v);
    if (best < 0 || d < best) best = d;
  });
  return std::max(best, 0);
}

std::size_t AuxGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += static_cast<std::size_t>(row.count());
  return twice / 2;
}

std::vector<std::pair<int, int>> AuxGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  vertices_.for_each([&](int u) {
    const auto& row = adj_[static_cast<std::size_t>(u)];
    for (int v = row.next(u); v != -1; v = row.next(v)) out.emplace_back(u, v);
  });
  return out;
}

}  // namespace hypersquare
