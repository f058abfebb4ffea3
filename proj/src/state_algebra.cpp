#include "qbroadcast/state_algebra.hpp"

#include <cmath>

namespace qbroadcast {

Mat4c from_bloch(const BlochState& s) {
  const Mat2c id2 = Mat2c::Identity();
  Mat4c rho = Mat4c::Identity();
  for (int i = 1; i <= 3; ++i) {
    rho += s.x(i - 1) * kron(pauli(i), id2);
    rho += s.y(i - 1) * kron(id2, pauli(i));
    for (int j = 1; j <= 3; ++j) rho += s.T(i - 1, j - 1) * kron(pauli(i), pauli(j));
  }
  return 0.25 * rho;
}

BlochState to_bloch(const MatXc& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw DimensionMismatch("to_bloch expects a 4x4 density matrix");
  const Mat2c id2 = Mat2c::Identity();
  BlochState s;
  for (int i = 1; i <= 3; ++i) {
    s.x(i - 1) = (rho * kron(pauli(i), id2)).trace().real();
    s.y(i - 1) = (rho * kron(id2, pauli(i))).trace().real();
    for (int j = 1; j <= 3; ++j)
      s.T(i - 1, j - 1) = (rho * kron(pauli(i), pauli(j))).trace().real();
  }
  return s;
}

ValidityReport validate(const MatXc& rho) {
  ValidityReport report;
  report.hermiticity_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  report.trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<MatXc> solver(0.5 * (rho + rho.adjoint()),
                                              Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.valid = report.hermiticity_dev <= kHermitianTol &&
                 report.trace_dev <= kTraceTol && report.min_eigenvalue >= -kPsdTol;
  return report;
}

BlochState werner_like(const WernerParams& params) {
  if (params.p < 0.0 || params.p > 1.0)
    throw DomainError("werner_like: p must lie in [0,1]");
  if (params.alpha_sq < 0.0 || params.alpha_sq > 1.0)
    throw DomainError("werner_like: alpha^2 must lie in [0,1]");
  const double beta_sq = 1.0 - params.alpha_sq;
  // alpha*beta taken on the non-negative branch.
  const double alpha_beta = std::sqrt(params.alpha_sq * beta_sq);
  BlochState s;
  s.x = Vec3(0.0, 0.0, params.p * (params.alpha_sq - beta_sq));
  s.y = s.x;
  s.T = Vec3(2.0 * params.p * alpha_beta, -2.0 * params.p * alpha_beta, params.p)
            .asDiagonal();
  return s;
}

std::array<double, 4> bell_eigenvalues(const BellDiagParams& params) {
  std::array<double, 4> lambda{};
  int k = 0;
  for (int m = 0; m <= 1; ++m) {
    for (int n = 0; n <= 1; ++n) {
      const double sm = (m == 0) ? 1.0 : -1.0;
      const double smn = ((m + n) % 2 == 0) ? 1.0 : -1.0;
      const double sn = (n == 0) ? 1.0 : -1.0;
      lambda[static_cast<std::size_t>(k++)] =
          0.25 * (1.0 + sm * params.c1 - smn * params.c2 + sn * params.c3);
    }
  }
  return lambda;
}

BlochState bell_diagonal(const BellDiagParams& params) {
  for (double lm : bell_eigenvalues(params))
    if (lm < -1e-12)
      throw InvalidState("bell_diagonal: (c1,c2,c3) lies outside the state tetrahedron");
  BlochState s;
  s.T = Vec3(params.c1, params.c2, params.c3).asDiagonal();
  return s;
}

BlochState pure_schmidt(double s) {
  if (s < 0.0 || s > 1.0) throw DomainError("pure_schmidt: s must lie in [0,1]");
  const double off = 2.0 * std::sqrt(s * (1.0 - s));
  BlochState out;
  out.x = Vec3(0.0, 0.0, 2.0 * s - 1.0);
  out.y = out.x;
  out.T = Vec3(off, -off, 1.0).asDiagonal();
  return out;
}

BlochState swap_subsystems(const BlochState& s) { return {s.y, s.x, s.T.transpose()}; }

double max_component_diff(const BlochState& a, const BlochState& b) {
  double d = (a.x - b.x).cwiseAbs().maxCoeff();
  d = std::max(d, (a.y - b.y).cwiseAbs().maxCoeff());
  d = std::max(d, (a.T - b.T).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace qbroadcast
