#include "qbroadcast/separability.hpp"

namespace qbroadcast {

namespace {

Mat4c require_4x4(const MatXc& rho, const char* who) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw DimensionMismatch(std::string(who) + " expects a 4x4 density matrix");
  return rho;
}

}  // namespace

Mat4c partial_transpose(const MatXc& rho_in, Subsystem subsystem) {
  const Mat4c rho = require_4x4(rho_in, "partial_transpose");
  Mat4c out;
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      if (subsystem == Subsystem::B)
        out.block<2, 2>(2 * m, 2 * n) = rho.block<2, 2>(2 * m, 2 * n).transpose();
      else
        out.block<2, 2>(2 * m, 2 * n) = rho.block<2, 2>(2 * n, 2 * m);
    }
  return out;
}

double min_pt_eigenvalue(const MatXc& rho) {
  const Mat4c pt = partial_transpose(rho, Subsystem::B);
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::array<double, 3> w_minors(const MatXc& rho) {
  const Mat4c pt = partial_transpose(rho, Subsystem::B);
  const double w2 = pt.topLeftCorner<2, 2>().determinant().real();
  const double w3 = pt.topLeftCorner<3, 3>().determinant().real();
  const double w4 = pt.determinant().real();
  return {w2, w3, w4};
}

SeparabilityVerdict is_separable(const MatXc& rho) {
  if (!validate(rho).valid)
    throw InvalidState("is_separable called on an invalid density matrix");
  SeparabilityVerdict verdict;
  const auto minors = w_minors(rho);
  verdict.w2 = minors[0];
  verdict.w3 = minors[1];
  verdict.w4 = minors[2];
  verdict.min_pt_eigenvalue = min_pt_eigenvalue(rho);
  verdict.separable = verdict.min_pt_eigenvalue >= -kPsdTol;
  return verdict;
}

ZoneVerdict local_output_separable_zone(const BlochState& s) {
  const auto zone = [](const Vec3& v) {
    const double n = norm_sq(v);
    return n <= 0.75 && n <= 1.0 + v(2) + v(2) * v(2);
  };
  return {zone(s.x), zone(s.y)};
}

ZoneVerdict nonlocal_output_separable_zone(const BlochState& s) {
  const auto zone = [](const Vec3& v) {
    const double n = norm_sq(v);
    return n <= 8.0 / 9.0 && n - v(2) * v(2) <= (4.0 / 3.0) * (1.0 + v(2));
  };
  return {zone(s.x), zone(s.y)};
}

}  // namespace qbroadcast
