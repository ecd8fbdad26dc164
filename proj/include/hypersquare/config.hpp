#pragma once

#include <cstdint>
#include <string>

namespace hypersquare {

/// Tunable constants of the construction.
///
/// Asymptotically 1 >> alpha >> beta, gamma >> 1/M >> theta_star; at desk
/// scale these are experiment knobs. validate() enforces the hard
/// requirements: every fraction in (0,1), beta < alpha/8, cap_m >= 1 and
/// q a positive multiple of 4. theta_star may be 0 (no reservoir).
struct Config {
  double alpha = 0.05;       ///< degree slack
  double beta = 0.005;       ///< G3 / Gv density threshold
  double gamma = 0.003;      ///< expansion threshold
  double theta_star = 0.15;  ///< reservoir / absorber scale
  int cap_m = 12;            ///< connections use fewer than cap_m internal vertices
  int q = 8;                 ///< vertices per cover path
  double tau = 0.01;         ///< bad-pair density
  double mu = 0.1;           ///< tolerated uncovered fraction
  std::uint64_t seed = 1;

  /// Throws ArgumentError naming the first violated constraint.
  void validate() const;
};

/// Seed for the i-th derived stream of a master seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

}  // namespace hypersquare
