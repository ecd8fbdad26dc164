#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

/// All C(n,3) triples. n >= 3.
Hypergraph3 complete(int n);

/// Balanced four-part partition; vertex v goes to part v mod 4.
struct PikhurkoPartition {
  std::array<std::vector<int>, 4> parts;
  int part_of(int v) const noexcept { return v % 4; }
};

struct PikhurkoInstance {
  Hypergraph3 hypergraph;
  PikhurkoPartition partition;
};

/// Four-part extremal construction. A triple e is an edge iff
///   |e & A0| = 2, or
///   e meets A0 and two distinct parts among A1..A3, or
///   e lies inside one of A1..A3, or
///   e misses A0 and meets two of A1..A3 in one and two vertices.
/// A0 spans no edge and one vertex from each of A1, A2, A3 never forms an
/// edge, so every tetrahedron meeting A0 has exactly two vertices there.
/// n >= 8.
PikhurkoInstance pikhurko(int n);

/// Each triple independently with probability p.
Hypergraph3 random_hypergraph(int n, double p, std::uint64_t seed);

/// Random base with triple probability base_p, then add-only repair: while a
/// pair has degree below `required`, add a uniform random missing triple
/// through the lexicographically first deficient pair.
/// Throws ArgumentError if required > n - 2.
Hypergraph3 repair_to_pair_degree(int n, double base_p, int required, std::uint64_t seed);

/// repair_to_pair_degree with base_p = delta2_target and
/// required = ceil(delta2_target * n).
Hypergraph3 dense_random(int n, double delta2_target, std::uint64_t seed);

/// Image of h under vertex v -> perm[v].
Hypergraph3 relabel(const Hypergraph3& h, std::span<const int> perm);

}  // namespace hypersquare
