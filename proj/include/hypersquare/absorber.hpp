#pragma once

#include <cstdint>
#include <vector>

#include "hypersquare/certify.hpp"
#include "hypersquare/config.hpp"
#include "hypersquare/connector.hpp"
#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

/// Pairwise disjoint 6-tuples, each a squared path.
struct AbsorberFamily {
  std::vector<SixTuple> tuples;  ///< selection order
  /// per_vertex_index[v]: indices of tuples that are v-absorbers.
  std::vector<std::vector<int>> per_vertex_index;
  int target = 0;         ///< requested absorbers per vertex
  bool degraded = false;  ///< some vertex outside the family owns fewer than target

  VertexSet vertex_set(int n) const;
};

/// Up to `limit` distinct v-absorbers avoiding exclude and v.
///
/// Depth-first in the order a, b, c, d, e, f; each level draws from the
/// bitset of vertices closing every required triple:
///   b in N(v,a);  c in N(a,b) & N(a,v) & N(b,v);
///   d in N(a,b) & N(a,c) & N(b,c) & N(b,v) & N(c,v);
///   e in N(b,c) & N(b,d) & N(c,d) & N(c,v) & N(d,v);
///   f in N(c,d) & N(c,e) & N(d,e) & N(d,v) & N(e,v).
/// Candidates at each level are visited in an order shuffled by `seed`.
std::vector<SixTuple> enumerate_v_absorbers(const Hypergraph3& h, int v, const VertexSet& exclude,
                                            std::size_t limit, std::uint64_t seed);

/// Absorbers per vertex requested by default: max(1, ceil(2 theta_star^2 n)).
int absorber_target(const Config& cfg, int n);

/// At most max(1, n / kFamilyVertexDivisor) tuples, so at most half of the
/// vertices sit in the family.
inline constexpr int kFamilyVertexDivisor = 12;

/// Greedy family: repeatedly take the vertex outside the family owning the
/// fewest absorbers, draw one of its absorbers disjoint from the family and
/// from r.members, and add it. Vertices with no drawable absorber are
/// skipped. Stops when every vertex outside the family owns >= target or
/// the tuple cap is reached; degraded reports a coverage shortfall.
AbsorberFamily build_absorber_family(const Hypergraph3& h, const Reservoir& r, const Config& cfg,
                                     int target);
AbsorberFamily build_absorber_family(const Hypergraph3& h, const Reservoir& r, const Config& cfg);

/// Chains the family's tuples in selection order, joining consecutive
/// end-triples with connect() while avoiding r.members and every vertex
/// already placed. Throws ConstructionError naming the failing pair.
VertexSeq build_absorbing_path(const Hypergraph3& h, const AbsorberFamily& f, const Reservoir& r,
                               const Config& cfg);

struct AbsorbOptions {
  /// When a vertex has no unused family tuple left, fall back to any six
  /// consecutive path vertices that form one of its absorbers and do not
  /// overlap an unused family tuple.
  bool allow_path_windows = false;
};

/// Inserts each x (ascending) between the 3rd and 4th vertex of an unused
/// x-absorber of f that appears consecutively in pa. Vertex set becomes
/// V(pa) + x; end-triples are unchanged. Throws AbsorptionError naming the
/// first vertex left without an absorber, ArgumentError if x meets pa.
VertexSeq absorb(const Hypergraph3& h, const VertexSeq& pa, const AbsorberFamily& f,
                 const std::vector<int>& x, AbsorbOptions opts = {});

}  // namespace hypersquare
