#include "qbroadcast/types.hpp"

namespace qbroadcast {

const Mat2c& pauli(int i) {
  static const std::array<Mat2c, 3> sigma = [] {
    std::array<Mat2c, 3> s;
    const Complex I(0.0, 1.0);
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -I, I, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  if (i < 1 || i > 3) throw DomainError("pauli index must be 1, 2 or 3");
  return sigma[static_cast<std::size_t>(i - 1)];
}

MatXc kron(const MatXc& a, const MatXc& b) {
  MatXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace qbroadcast
