#include "qbroadcast/random.hpp"

#include <cmath>

namespace qbroadcast {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

MatXc random_density_matrix(Rng& rng, int dim) {
  MatXc g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  MatXc rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

BlochState random_bloch_state(Rng& rng) { return to_bloch(random_density_matrix(rng)); }

namespace {

Mat2c random_qubit_state(Rng& rng) {
  // Bloch vector uniform in the unit ball.
  Vec3 r;
  do {
    r = Vec3(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  } while (r.squaredNorm() > 1.0);
  Mat2c rho = 0.5 * Mat2c::Identity();
  for (int i = 1; i <= 3; ++i) rho += 0.5 * r(i - 1) * pauli(i);
  return rho;
}

}  // namespace

Mat4c random_classical_quantum_state(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * M_PI);
  const double s = std::sqrt(1.0 - z * z);
  const Vec3 axis(s * std::cos(phi), s * std::sin(phi), z);
  Mat2c n_sigma = Mat2c::Zero();
  for (int i = 1; i <= 3; ++i) n_sigma += axis(i - 1) * pauli(i);
  const Mat2c proj_up = 0.5 * (Mat2c::Identity() + n_sigma);
  const Mat2c proj_dn = 0.5 * (Mat2c::Identity() - n_sigma);
  const double p = rng.uniform();
  return p * kron(proj_up, random_qubit_state(rng)) +
         (1.0 - p) * kron(proj_dn, random_qubit_state(rng));
}

}  // namespace qbroadcast
