#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hypersquare/certify.hpp"
#include "hypersquare/config.hpp"
#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

/// Tile weights for sizes 2, 3, 4. Fixed: the exchange moves below are only
/// improving for exactly these values.
inline constexpr std::array<int, 5> kTileWeight{0, 0, 2, 6, 11};

/// Pairs with pair degree below `threshold` are bad.
class GoodPairOracle {
 public:
  GoodPairOracle() = default;
  GoodPairOracle(const Hypergraph3& h, int threshold);

  int threshold() const noexcept { return threshold_; }
  bool is_bad(int u, int v) const { return bad_with_[static_cast<std::size_t>(u)].contains(v); }
  /// Partners of u in bad pairs.
  const VertexSet& bad_partners(int u) const { return bad_with_[static_cast<std::size_t>(u)]; }
  std::size_t bad_count() const;
  std::vector<std::pair<int, int>> bad_pairs() const;

 private:
  int threshold_ = 0;
  std::vector<VertexSet> bad_with_;
};

GoodPairOracle classify_pairs(const Hypergraph3& h, int threshold);

/// Repeatedly drops the vertex with the most bad pairs inside the current
/// set (lowest id on ties) while that count is >= sqrt(tau) * n.
VertexSet prune_bad_vertices(const Hypergraph3& h, double tau, const GoodPairOracle& oracle);

/// Vertex-disjoint good tiles: pairs, edges (3 vertices), tetrahedra.
struct Tiling {
  std::vector<std::vector<int>> tiles;  ///< each sorted; list sorted
  int weight = 0;

  int count(std::size_t size) const;
};

/// Tile of size 2..4 spans a complete good subhypergraph.
bool is_good_tile(const Hypergraph3& h, const GoodPairOracle& oracle, std::span<const int> tile);

/// Local search for a heavy {K2,K3,K4}-tiling of `domain`.
///
/// Starts from a greedy good-pair matching (seeded order) and applies
/// strictly improving relocations until none is left. A relocation moves k
/// vertices of one tile (or one uncovered vertex) into k distinct tiles of
/// size <= 3 that they each connect to; the rest of the source tile stays a
/// tile if it still has two vertices. This covers the single-vertex move
/// (gains +1, +2, +3), splitting a tetrahedron into two (+1), dissolving an
/// edge tile into two pairs (+2) and spreading three tetrahedron vertices
/// (+1). Two uncovered vertices forming a good pair become a new tile (+2).
/// When nothing else applies, up to four tiles plus up to four uncovered
/// vertices are re-tiled exactly (bounded number of neighbourhoods per
/// round), which makes the result optimal on domains of at most 8 vertices.
Tiling weighted_tiling(const Hypergraph3& h, const VertexSet& domain, const GoodPairOracle& oracle,
                       std::uint64_t seed);

struct AlmostFactor {
  std::vector<std::array<int, 4>> k4s;
  std::vector<int> leftover;
  int threshold = 0;             ///< ceil((3/4 + alpha) n)
  double leftover_bound = 0.0;   ///< 2 sqrt(tau) n + 14
  bool within_bound = false;
  Tiling tiling;
  std::vector<int> pruned;  ///< removed by prune_bad_vertices
};

AlmostFactor almost_k4_factor(const Hypergraph3& h, const Config& cfg);

struct CoverResult {
  std::vector<VertexSeq> paths;
  int domain_size = 0;
  int uncovered = 0;
  bool within_mu = false;  ///< uncovered <= mu * domain_size
};

/// Greedy vertex-disjoint squared paths of exactly q vertices inside
/// `domain`. Each path starts from a tetrahedron and grows one vertex at a
/// time by the triple-state rule, with bounded backtracking.
CoverResult cover_with_squared_paths(const Hypergraph3& h, int q, double mu, std::uint64_t seed,
                                     const VertexSet& domain);
CoverResult cover_with_squared_paths(const Hypergraph3& h, int q, double mu, std::uint64_t seed);

}  // namespace hypersquare
