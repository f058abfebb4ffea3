// Two-qubit states in the Bloch representation {x, y, T} and conversions to
// and from 4x4 density matrices, plus the Werner-like, Bell-diagonal and
// pure Schmidt-form families.
#pragma once

#include "qbroadcast/types.hpp"

#include <array>

namespace qbroadcast {

/// A two-qubit state as the Bloch vectors of both marginals and the 3x3
/// correlation matrix: rho = (1/4)[I4 + sum_i x_i s_i(x)I + sum_i y_i I(x)s_i
/// + sum_ij T_ij s_i(x)s_j], basis order |00>,|01>,|10>,|11>.
struct BlochState {
  Vec3 x = Vec3::Zero();
  Vec3 y = Vec3::Zero();
  Mat3 T = Mat3::Zero();
};

struct ValidityReport {
  double hermiticity_dev = 0.0;
  double trace_dev = 0.0;
  double min_eigenvalue = 0.0;
  bool valid = false;
};

/// p-mixture of the pure state sqrt(a)|00> + sqrt(1-a)|11> (a = alpha^2)
/// with the maximally mixed state.
struct WernerParams {
  double p = 0.0;
  double alpha_sq = 0.5;
};

/// Correlation-matrix diagonal (c1, c2, c3) of a Bell-diagonal state.
struct BellDiagParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// Reconstructs the density matrix. Always constructible; the result may be
/// non-physical, which validate() reports.
Mat4c from_bloch(const BlochState& s);

/// Trace formulas x_i = tr[rho (s_i(x)I)], y_i = tr[rho (I(x)s_i)],
/// T_ij = tr[rho (s_i(x)s_j)]. Exact inverse of from_bloch.
BlochState to_bloch(const MatXc& rho);

/// Hermiticity, trace and positivity check against the density-matrix
/// tolerances. Report-style: never throws.
ValidityReport validate(const MatXc& rho);

BlochState werner_like(const WernerParams& params);

BlochState bell_diagonal(const BellDiagParams& params);

/// Eigenvalues lambda_mn = (1/4)[1 + (-1)^m c1 - (-1)^(m+n) c2 + (-1)^n c3]
/// in the order (m,n) = (0,0), (0,1), (1,0), (1,1). They sum to 1 exactly.
std::array<double, 4> bell_eigenvalues(const BellDiagParams& params);

/// The state sqrt(s)|00> + sqrt(1-s)|11>, s in [0,1].
BlochState pure_schmidt(double s);

/// Largest componentwise deviation across x, y and T.
double max_component_diff(const BlochState& a, const BlochState& b);

/// The same state with the two qubits relabeled: {x,y,T} -> {y,x,T^t}.
BlochState swap_subsystems(const BlochState& s);

}  // namespace qbroadcast
