// Seeded random-state corpora for verification. Uniform/normal variates are
// derived from the raw engine output so that sampled states are identical
// across platforms and standard-library implementations.
#pragma once

#include "qbroadcast/state_algebra.hpp"

#include <cstdint>
#include <random>

namespace qbroadcast {

inline constexpr std::uint64_t kDefaultSeed = 424242;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random density matrix from the Ginibre ensemble: G G^dag / tr(G G^dag).
MatXc random_density_matrix(Rng& rng, int dim = 4);

BlochState random_bloch_state(Rng& rng);

/// Random zero-discord state p |n><n| (x) rho1 + (1-p) |-n><-n| (x) rho2
/// with a uniformly random measurement axis n on subsystem A.
Mat4c random_classical_quantum_state(Rng& rng);

}  // namespace qbroadcast
