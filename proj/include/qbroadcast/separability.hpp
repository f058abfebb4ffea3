// Peres-Horodecki separability for two qubits: partial-transpose spectrum
// (the decision path) and the W2/W3/W4 determinant minors (a verification
// surface), plus the closed-form separable zones of the cloner side outputs.
#pragma once

#include "qbroadcast/state_algebra.hpp"

#include <array>

namespace qbroadcast {

enum class Subsystem { A, B };

struct SeparabilityVerdict {
  double w2 = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;
  double min_pt_eigenvalue = 0.0;
  bool separable = false;
};

/// Per-side booleans for the cloner's original/copy pairs (side A from x,
/// side B from y).
struct ZoneVerdict {
  bool side_a = false;
  bool side_b = false;
};

/// Index swap rho^T_(m mu, n nu) = rho_(m nu, n mu) on the chosen subsystem.
Mat4c partial_transpose(const MatXc& rho, Subsystem subsystem = Subsystem::B);

/// Smallest eigenvalue of the partial transpose (subsystem B; A has the
/// same spectrum).
double min_pt_eigenvalue(const MatXc& rho);

/// Leading principal minors (w2, w3) and full determinant (w4) of the
/// partial transpose in the fixed |00>,|01>,|10>,|11> ordering.
std::array<double, 3> w_minors(const MatXc& rho);

/// PPT verdict: separable iff min PT eigenvalue >= -1e-10. The minors are
/// reported alongside. Throws InvalidState if rho fails validate().
SeparabilityVerdict is_separable(const MatXc& rho);

/// Closed-form separable zone for the local SI side outputs:
/// ||x|| <= 3/4 and ||x|| <= 1 + x3 + x3^2, squared-norm convention.
ZoneVerdict local_output_separable_zone(const BlochState& s);

/// Closed-form separable zone for the nonlocal SI side outputs:
/// ||x|| <= 8/9 and ||x|| - x3^2 <= (4/3)(1 + x3).
ZoneVerdict nonlocal_output_separable_zone(const BlochState& s);

}  // namespace qbroadcast
