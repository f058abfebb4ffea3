#include "qbroadcast/correlations.hpp"

#include <cmath>
#include <limits>

namespace qbroadcast {

DiscordResult geometric_discord(const BlochState& s) {
  if (!validate(from_bloch(s)).valid)
    throw InvalidState("geometric_discord called on an invalid state");
  DiscordResult result;
  result.omega = s.x * s.x.transpose() + s.T * s.T.transpose();
  Eigen::SelfAdjointEigenSolver<Mat3> solver(result.omega, Eigen::EigenvaluesOnly);
  result.lambda_max = solver.eigenvalues().maxCoeff();
  result.value = 0.25 * (norm_sq(s.x) + norm_sq(s.T) - result.lambda_max);
  return result;
}

namespace {

// Squared HS distance between rho and its dephasing along the A-side
// measurement direction n = (theta, phi); the dephased state is the closest
// classical-quantum state with that measurement basis.
double dephasing_distance(const Mat4c& rho, double theta, double phi) {
  const Vec3 n(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
               std::cos(theta));
  Mat2c n_sigma = Mat2c::Zero();
  for (int i = 1; i <= 3; ++i) n_sigma += n(i - 1) * pauli(i);
  const Mat2c proj_up = 0.5 * (Mat2c::Identity() + n_sigma);
  const Mat2c proj_dn = 0.5 * (Mat2c::Identity() - n_sigma);
  const Mat4c pu = kron(proj_up, Mat2c::Identity());
  const Mat4c pd = kron(proj_dn, Mat2c::Identity());
  const Mat4c chi = pu * rho * pu + pd * rho * pd;
  const Mat4c diff = rho - chi;
  return (diff * diff).trace().real();
}

}  // namespace

double discord_oracle(const MatXc& rho_in, int resolution) {
  if (resolution < 8) throw DomainError("discord_oracle: resolution must be >= 8");
  if (rho_in.rows() != 4 || rho_in.cols() != 4)
    throw DimensionMismatch("discord_oracle expects a 4x4 density matrix");
  if (!validate(rho_in).valid)
    throw InvalidState("discord_oracle called on an invalid density matrix");
  const Mat4c rho = rho_in;

  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double theta = M_PI * (i + 0.5) / resolution;
    for (int j = 0; j < resolution; ++j) {
      const double phi = 2.0 * M_PI * j / resolution;
      const double d = dephasing_distance(rho, theta, phi);
      if (d < best) {
        best = d;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  // Pattern search around the best grid cell.
  double step = M_PI / resolution;
  while (step > 1e-6) {
    bool moved = false;
    const double candidates[4][2] = {{best_theta + step, best_phi},
                                     {best_theta - step, best_phi},
                                     {best_theta, best_phi + step},
                                     {best_theta, best_phi - step}};
    for (const auto& c : candidates) {
      const double d = dephasing_distance(rho, c[0], c[1]);
      if (d < best) {
        best = d;
        best_theta = c[0];
        best_phi = c[1];
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

double discord_local_output_sd(Locality locality, double lambda, double norm_sq_x) {
  const double hi = locality == Locality::Local ? 0.5 : 0.25;
  if (!(lambda >= 0.0 && lambda <= hi))
    throw SpecError("discord_local_output_sd: lambda outside its permitted interval");
  if (locality == Locality::Local) {
    const double mu = 1.0 - 2.0 * lambda;
    return 0.5 * (1.0 + mu * mu * norm_sq_x - 8.0 * lambda + 20.0 * lambda * lambda);
  }
  const double mu = 1.0 - 4.0 * lambda;
  return 0.5 * (1.0 + mu * mu * norm_sq_x - 16.0 * lambda + 68.0 * lambda * lambda);
}

TheoremMinimum theorem_minimum_check(Locality locality, double norm_sq) {
  const double hi = locality == Locality::Local ? 0.5 : 0.25;
  const double grid_step = 1e-4;
  double best_lambda = 0.0;
  double best = discord_local_output_sd(locality, 0.0, norm_sq);
  for (double lm = grid_step; lm <= hi + 1e-15; lm += grid_step) {
    const double clipped = std::min(lm, hi);
    const double v = discord_local_output_sd(locality, clipped, norm_sq);
    if (v < best) {
      best = v;
      best_lambda = clipped;
    }
  }
  // Golden-section refinement inside the bracketing cell; the expression is
  // a quadratic in lambda, so any unimodal refinement converges.
  double lo = std::max(0.0, best_lambda - grid_step);
  double up = std::min(hi, best_lambda + grid_step);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  while (up - lo > 1e-12) {
    const double a = up - gr * (up - lo);
    const double b = lo + gr * (up - lo);
    if (discord_local_output_sd(locality, a, norm_sq) <
        discord_local_output_sd(locality, b, norm_sq))
      up = b;
    else
      lo = a;
  }
  const double refined = 0.5 * (lo + up);
  const double refined_value = discord_local_output_sd(locality, refined, norm_sq);
  if (refined_value < best) {
    best = refined_value;
    best_lambda = refined;
  }
  return {best_lambda, best, best > 0.0};
}

StatedMinimum theorem_stated_minimum(Locality locality, double norm_sq) {
  if (locality == Locality::Local) {
    const double w = 1.0 + (9.0 / 25.0) * norm_sq;
    return {0.2, 0.5 * w - 0.4};
  }
  const double w = norm_sq;
  return {(2.0 + w) / (17.0 + 4.0 * w), (1.0 + 5.0 * w) / (34.0 + 8.0 * w)};
}

}  // namespace qbroadcast
