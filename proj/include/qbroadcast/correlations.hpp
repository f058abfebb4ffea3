// Quantum correlations beyond entanglement: geometric discord via the
// closed form, via a measurement-minimization oracle, and via the
// state-dependent cloner output expressions with their lambda minima.
#pragma once

#include "qbroadcast/cloning.hpp"

namespace qbroadcast {

/// Discord threshold below which a state counts as classically correlated.
inline constexpr double kDiscordTol = 1e-8;

struct DiscordResult {
  double value = 0.0;
  double lambda_max = 0.0;  // maximal eigenvalue of omega
  Mat3 omega = Mat3::Zero();
};

/// Closed-form geometric discord D_G = (1/4)(||x|| + ||T|| - lmax(omega)),
/// omega = x x^t + T T^t, squared-norm convention. Zero exactly on
/// classical-quantum states. Throws InvalidState on invalid input.
DiscordResult geometric_discord(const BlochState& s);

/// Minimal squared Hilbert-Schmidt distance to the classical-quantum set,
/// minimizing over von Neumann measurements on subsystem A: a (theta, phi)
/// grid of the given resolution followed by local refinement to 1e-6. The
/// sweep reduces with a lexicographic tie-break on (theta, phi).
double discord_oracle(const MatXc& rho, int resolution);

/// The quoted side-pair discord expression for a state-dependent cloner
/// output: (1/2)(1 + mu^2 ||x|| - 8 l + 20 l^2) local with mu = 1-2l, or
/// (1/2)(1 + mu^2 ||x|| - 16 l + 68 l^2) nonlocal with mu = 1-4l.
double discord_local_output_sd(Locality locality, double lambda, double norm_sq_x);

struct TheoremMinimum {
  double lambda_star = 0.0;
  double min_value = 0.0;
  bool positive = false;
};

/// Numeric minimum of discord_local_output_sd over the permitted lambda
/// interval (1e-4 grid plus local refinement).
TheoremMinimum theorem_minimum_check(Locality locality, double norm_sq);

struct StatedMinimum {
  double lambda = 0.0;
  double value = 0.0;
};

/// The minima as stated for the no-go theorems: w/2 - 2/5 at lambda = 1/5
/// with w = 1 + (9/25) ||x|| (local), and (1+5w)/(34+8w) at
/// lambda = (2+w)/(17+4w) with w = ||x|| (nonlocal).
StatedMinimum theorem_stated_minimum(Locality locality, double norm_sq);

}  // namespace qbroadcast
