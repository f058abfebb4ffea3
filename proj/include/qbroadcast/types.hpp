// Core dense types, Pauli basis and small linear-algebra helpers shared by
// every module. Eigen is the only math dependency.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qbroadcast {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using MatXc = Eigen::MatrixXcd;
using VecXc = Eigen::VectorXcd;

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct InvalidState : std::runtime_error {
  explicit InvalidState(const std::string& what) : std::runtime_error(what) {}
};

struct SpecError : std::invalid_argument {
  explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Pauli matrix sigma_i for i in {1,2,3} = {X, Y, Z}.
const Mat2c& pauli(int i);

/// Kronecker product of two dense complex matrices.
MatXc kron(const MatXc& a, const MatXc& b);

/// Squared-norm convention used throughout: ||a|| = tr(a^dagger a).
inline double norm_sq(const Vec3& v) { return v.squaredNorm(); }
inline double norm_sq(const Mat3& m) { return m.squaredNorm(); }

}  // namespace qbroadcast
