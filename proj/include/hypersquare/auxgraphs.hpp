#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypersquare/aux_graph.hpp"
#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

// Counts below are over *ordered* tuples, matching the set-builder
// definitions: an unordered triple {a,b,c} contributes 6 to the G3 count
// and an unordered pair {a,b} contributes 2 to the Gv count.

/// xy adjacent iff #{(a,b,c) : abcx and abcy are tetrahedra} >= beta * n^3.
AuxGraph build_g3(const Hypergraph3& h, double beta);

/// Graph on V \ {v}; xy adjacent iff #{(a,b) : xabv and yabv are tetrahedra} >= beta * n^2.
AuxGraph build_gv(const Hypergraph3& h, int v, double beta);

/// Graph on N(v,w); uu' adjacent iff uu'vw is a tetrahedron.
AuxGraph build_gvw(const Hypergraph3& h, int v, int w);

/// Number of walks x = u0, ..., us = y in g. Throws ArgumentError if x or y
/// lies outside g. s = 0 gives [x == y].
std::uint64_t count_walks(const AuxGraph& g, int x, int y, int s);

struct WalkCountTable {
  int source = 0;
  int length = 0;
  /// counts[u] = walks of `length` from source to u; zero outside g.
  std::vector<std::uint64_t> counts;
};

WalkCountTable walk_counts(const AuxGraph& g, int source, int s);

struct ExpansionReport {
  bool exhaustive = false;  ///< false: heuristic search, a "no violation" verdict certifies nothing
  bool violation = false;   ///< some admissible partition has e(X,Y) < gamma * n^2
  std::int64_t min_side = 0;        ///< ceil(sqrt(gamma) * n)
  double required_crossing = 0.0;   ///< gamma * n^2
  std::int64_t best_crossing = -1;  ///< smallest crossing count found (-1 if no admissible partition)
  std::vector<int> side_x;          ///< the minimising partition's X side
  int min_degree = 0;
  bool degree_ok = false;  ///< min degree >= sqrt(gamma) * n
};

/// Partitions X | Y of g's vertex set with |X|, |Y| >= sqrt(gamma) * n, where
/// n = |V(g)|. Exhaustive up to 20 vertices, otherwise `effort` seeded random
/// partitions each refined by single-vertex moves.
ExpansionReport expansion_report(const AuxGraph& g, double gamma, int effort, std::uint64_t seed);

}  // namespace hypersquare
