#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

#include "hypersquare/certify.hpp"
#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

enum class Verdict { yes, no, timeout };

std::string_view to_string(Verdict v) noexcept;

struct CycleOracleResult {
  Verdict verdict = Verdict::timeout;
  std::optional<VertexSeq> witness;  ///< certified squared Hamiltonian cycle when yes
  std::uint64_t nodes = 0;
};

struct TilingOracleResult {
  Verdict verdict = Verdict::timeout;
  std::vector<std::array<int, 4>> tiles;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for a squared Hamiltonian cycle.
///
/// Vertex 0 comes first and the orientation with second vertex < last vertex
/// is the only one explored, so every cycle is met once. Extensions follow
/// the triple-state rule; a branch is cut when no unused vertex could still
/// close the cycle onto (0, v1, v2) or some unused vertex has no tetrahedron
/// left among the unused vertices plus the current ends.
CycleOracleResult oracle_has_squared_hamiltonian(const Hypergraph3& h,
                                                 std::chrono::milliseconds time_limit);

/// Exact cover of V by tetrahedra, branching on the lowest uncovered vertex.
/// Immediate no when 4 does not divide n.
TilingOracleResult oracle_has_perfect_k4_tiling(const Hypergraph3& h,
                                                std::chrono::milliseconds time_limit);

}  // namespace hypersquare
