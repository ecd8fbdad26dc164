#include "hypersquare/config.hpp"

#include "hypersquare/errors.hpp"

namespace hypersquare {

namespace {

void require_fraction(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) throw ArgumentError(std::string(name) + " must lie in (0,1)");
}

}  // namespace

void Config::validate() const {
  require_fraction(alpha, "alpha");
  require_fraction(beta, "beta");
  require_fraction(gamma, "gamma");
  require_fraction(tau, "tau");
  require_fraction(mu, "mu");
  if (!(theta_star >= 0.0 && theta_star < 1.0))
    throw ArgumentError("theta_star must lie in [0,1)");
  if (!(beta < alpha / 8.0)) throw ArgumentError("beta must be below alpha/8");
  if (cap_m < 1) throw ArgumentError("cap_m must be at least 1");
  if (q < 4 || q % 4 != 0) throw ArgumentError("q must be a positive multiple of 4");
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hypersquare
