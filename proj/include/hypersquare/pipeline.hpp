#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersquare/certify.hpp"
#include "hypersquare/config.hpp"
#include "hypersquare/hypergraph.hpp"
#include "hypersquare/oracle.hpp"

namespace hypersquare {

struct StageStats {
  int reservoir_size = 0;
  int family_size = 0;
  bool family_degraded = false;
  int absorbing_path_size = 0;
  int cover_paths = 0;
  int cover_uncovered = 0;
  int reservoir_used = 0;
  /// cap_m * |W| <= theta_star^4 * n, the reservoir budget the argument assumes.
  bool reservoir_budget_ok = false;
  int leftover = 0;
  std::vector<std::pair<std::string, double>> timings_ms;
};

struct ConstructionReport {
  std::optional<VertexSeq> cycle;  ///< always certified when present
  std::string failed_stage;        ///< empty on success
  std::string detail;
  int attempts = 0;
  StageStats stats;  ///< of the last attempt

  bool success() const noexcept { return cycle.has_value(); }
};

inline constexpr int kConstructionAttempts = 3;

/// reservoir -> absorber family (avoiding R) -> absorbing path -> cover of
/// H - (P_A + R) -> cyclic connection through R -> absorb the leftover into
/// P_A. Each attempt reseeds; up to kConstructionAttempts attempts. A cycle
/// is only returned after certify_hamiltonian accepts it.
/// Throws ArgumentError if n < 5.
ConstructionReport construct_squared_hamiltonian(const Hypergraph3& h, const Config& cfg);

enum class ProbeMode { exact, pipeline, both };

struct ProbeRow {
  double fraction = 0.0;
  int trial = 0;
  int min_pair_degree = 0;
  std::string oracle;    ///< yes | no | timeout | skipped
  std::string pipeline;  ///< cycle | failure | skipped
  std::string agreement; ///< match | pipeline_miss | contradiction | na
};

struct ProbeOptions {
  int n = 10;
  std::vector<double> grid;
  int trials = 1;
  std::uint64_t seed = 1;
  std::chrono::milliseconds time_limit{10'000};
  ProbeMode mode = ProbeMode::both;
  int jobs = 1;
  Config config;
};

/// For every grid fraction f and trial t, draws a random instance with base
/// triple probability f repaired to pair degree min(ceil(f n), n - 2), then
/// runs the oracle and/or the pipeline. Rows come out grid-major in trial
/// order regardless of `jobs`.
std::vector<ProbeRow> threshold_probe(const ProbeOptions& opts);

std::string probe_csv(const std::vector<ProbeRow>& rows);

}  // namespace hypersquare
