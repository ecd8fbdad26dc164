#pragma once

#include <array>
#include <span>
#include <vector>

#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

/// Ordered vertex sequence: a squared path or walk when open, a squared
/// cycle when closed.
struct VertexSeq {
  std::vector<int> vertices;
  bool closed = false;

  std::size_t size() const noexcept { return vertices.size(); }
  Triple front_triple() const { return {vertices[0], vertices[1], vertices[2]}; }
  Triple back_triple() const {
    const auto n = vertices.size();
    return {vertices[n - 3], vertices[n - 2], vertices[n - 1]};
  }
  friend bool operator==(const VertexSeq&, const VertexSeq&) = default;
};

using SixTuple = std::array<int, 6>;

// Squared-path semantics: every 3-subset of every 4 consecutive vertices is an
// edge, i.e. every window of four spans a tetrahedron. A length-3 sequence is
// accepted as a degenerate squared path iff it is an edge; this is what lets
// an end-triple act as a connectable unit.

/// Throws ArgumentError if s is closed or has fewer than 3 entries.
bool is_squared_path(const Hypergraph3& h, const VertexSeq& s);

/// Cyclic windows; throws ArgumentError if s is open or shorter than 5.
bool is_squared_cycle(const Hypergraph3& h, const VertexSeq& s);

/// Like is_squared_path but repeats at distance >= 4 are allowed. Windows
/// containing a repeat are always rejected.
bool is_squared_walk(const Hypergraph3& h, const VertexSeq& s);

/// a,b,c,interior...,x,y,z is a tight walk in h (consecutive triples are
/// edges) and a squared walk in the link graph of v (vertices at distance
/// <= 2 are adjacent in L_v). Throws PreconditionError if abc or xyz is not
/// an edge or v occurs in the sequence.
bool is_squared_v_walk(const Hypergraph3& h, int v, const Triple& abc, const Triple& xyz,
                       std::span<const int> interior);

/// (a..f) distinct, v not among them, and both abcdef and abcvdef are
/// squared paths. Never throws.
bool is_v_absorber(const Hypergraph3& h, int v, const SixTuple& t) noexcept;

/// is_squared_cycle and the cycle visits every vertex exactly once.
bool certify_hamiltonian(const Hypergraph3& h, const VertexSeq& s);

}  // namespace hypersquare
