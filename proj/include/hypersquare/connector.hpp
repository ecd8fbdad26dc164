#pragma once

#include <cstdint>
#include <optional>

#include "hypersquare/certify.hpp"
#include "hypersquare/config.hpp"
#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

inline constexpr std::int64_t kDefaultConnectBudget = 1'000'000;

/// Vertices set aside for routing connections. used is a subset of members.
struct Reservoir {
  VertexSet members;
  VertexSet used;

  VertexSet available() const { return members - used; }
};

/// Shortest squared path a,b,c,u1..um,x,y,z with m < cap_m and no u_i in
/// `forbidden`.
///
/// Breadth-first search over states (p,q,r) = the last three vertices;
/// (p,q,r) -> (q,r,u) iff pqu, pru, qru are edges and u is fresh. States are
/// expanded in lexicographic candidate order and at most `budget` states are
/// kept per depth. Returns nullopt when the search is exhausted.
///
/// Throws ArgumentError if abc or xyz is not an edge, the six end vertices
/// are not distinct, or an end vertex is forbidden.
std::optional<VertexSeq> connect(const Hypergraph3& h, const Triple& abc, const Triple& xyz,
                                 const VertexSet& forbidden, int cap_m,
                                 std::int64_t budget = kDefaultConnectBudget);

/// Exact number of tuples (u1..um) of distinct fresh vertices such that
/// a,b,c,u1..um,x,y,z is a squared path. Throws ResourceError if n^m > 1e8.
std::uint64_t count_connections(const Hypergraph3& h, const Triple& abc, const Triple& xyz, int m);

/// (1 - 3/(10 cap_m)) * theta_star^2.
double reservoir_inclusion_probability(const Config& cfg);

/// Independent inclusion with reservoir_inclusion_probability; samples with
/// more than theta_star^2 * n members are redrawn under the next derived
/// seed. Throws ResourceError after 256 oversize draws.
Reservoir sample_reservoir(const Hypergraph3& h, const Config& cfg);

/// connect() with interior restricted to r.available(); on success the
/// interior is marked used.
std::optional<VertexSeq> connect_through_reservoir(const Hypergraph3& h, Reservoir& r,
                                                   const Triple& abc, const Triple& xyz, int cap_m,
                                                   std::int64_t budget = kDefaultConnectBudget);

}  // namespace hypersquare
