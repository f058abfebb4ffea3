#include "qbroadcast/cloning.hpp"

#include <cmath>
#include <numeric>

namespace qbroadcast {

namespace {

constexpr double kSiLambdaLocal = 1.0 / 6.0;
constexpr double kSiLambdaNonlocal = 0.1;

void check_lambda(Locality locality, double lambda) {
  const double hi = locality == Locality::Local ? 0.5 : 0.25;
  if (!(lambda >= 0.0 && lambda <= hi))
    throw SpecError("state-dependent lambda outside its permitted interval");
}

}  // namespace

ClonerSpec ClonerSpec::local_si() { return {Locality::Local, Dependence::StateIndependent, {}}; }

ClonerSpec ClonerSpec::nonlocal_si() {
  return {Locality::Nonlocal, Dependence::StateIndependent, {}};
}

ClonerSpec ClonerSpec::local_sd(double lambda) {
  check_lambda(Locality::Local, lambda);
  return {Locality::Local, Dependence::StateDependent, lambda};
}

ClonerSpec ClonerSpec::nonlocal_sd(double lambda) {
  check_lambda(Locality::Nonlocal, lambda);
  return {Locality::Nonlocal, Dependence::StateDependent, lambda};
}

double ClonerSpec::mu() const {
  if (dependence != Dependence::StateDependent || !lambda)
    throw SpecError("mu is defined for state-dependent cloners only");
  return locality == Locality::Local ? 1.0 - 2.0 * *lambda : 1.0 - 4.0 * *lambda;
}

bool ClonerSpec::reduces_to_si() const {
  if (dependence != Dependence::StateDependent || !lambda) return false;
  const double si = locality == Locality::Local ? kSiLambdaLocal : kSiLambdaNonlocal;
  return std::abs(*lambda - si) < 1e-12;
}

std::array<std::pair<std::string_view, BlochState>, 4> CloneOutputs::labeled() const {
  if (locality == Locality::Local)
    return {{{"13", side_a}, {"24", side_b}, {"14", cross_a}, {"23", cross_b}}};
  return {{{"12", cross_a}, {"34", cross_b}, {"13", side_a}, {"24", side_b}}};
}

CloneOutputs clone_closed_form(const BlochState& s, const ClonerSpec& spec) {
  CloneOutputs out;
  out.locality = spec.locality;
  if (spec.dependence == Dependence::StateIndependent) {
    if (spec.locality == Locality::Local) {
      const double eta = 2.0 / 3.0;
      out.side_a = {eta * s.x, eta * s.x, Mat3::Identity() / 3.0};
      out.side_b = {eta * s.y, eta * s.y, Mat3::Identity() / 3.0};
      out.cross_a = {eta * s.x, eta * s.y, eta * eta * s.T};
      out.cross_b = out.cross_a;
    } else {
      const double eta = 3.0 / 5.0;
      out.cross_a = {eta * s.x, eta * s.y, eta * s.T};
      out.cross_b = out.cross_a;
      out.side_a = {eta * s.x, eta * s.x, Mat3::Identity() / 5.0};
      out.side_b = {eta * s.y, eta * s.y, Mat3::Identity() / 5.0};
    }
    return out;
  }

  const double lm = *spec.lambda;
  check_lambda(spec.locality, lm);
  const double mu = spec.mu();
  if (spec.locality == Locality::Local) {
    const Mat3 t_side = Vec3(2.0 * lm, 2.0 * lm, 1.0 - 4.0 * lm).asDiagonal();
    out.side_a = {mu * s.x, mu * s.x, t_side};
    out.side_b = {mu * s.y, mu * s.y, t_side};
    // One factor of mu per independent machine, hence mu^2 on the cross
    // correlations; matches the SI cloner's 4/9 at lambda = 1/6.
    out.cross_a = {mu * s.x, mu * s.y, mu * mu * s.T};
    out.cross_b = out.cross_a;
  } else {
    const Mat3 t_side = Vec3(2.0 * lm, 2.0 * lm, 1.0 - 8.0 * lm).asDiagonal();
    out.side_a = {mu * s.x, mu * s.x, t_side};
    out.side_b = {mu * s.y, mu * s.y, t_side};
    out.cross_a = {mu * s.x, mu * s.y, mu * s.T};
    out.cross_b = out.cross_a;
  }
  return out;
}

MatXc build_bh_unitary(const ClonerSpec& spec) {
  if (spec.dependence != Dependence::StateIndependent)
    throw SpecError("the unitary oracle covers state-independent machines only");
  const int m = spec.machine_dim();
  const int dim = m * m * m;  // input (x) blank (x) machine
  const double c = std::sqrt(2.0 / (m + 1));
  const double d = std::sqrt(1.0 / (2.0 * (m + 1)));

  const auto idx = [m](int in, int blank, int machine) {
    return (in * m + blank) * m + machine;
  };

  MatXc u = MatXc::Zero(dim, dim);
  std::vector<int> defined;
  // Machine basis {|X_ii>} mapped to machine index i; Y_ij = X_jj as forced
  // by <X_ii|Y_ji> = 1. Initial machine state |X> = |X_11>, blank = |0...0>.
  for (int i = 0; i < m; ++i) {
    const int col = idx(i, 0, 0);
    u(idx(i, i, i), col) += c;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      u(idx(i, j, j), col) += d;
      u(idx(j, i, j), col) += d;
    }
    defined.push_back(col);
  }

  // Complete the remaining columns by Gram-Schmidt against the defined ones;
  // those columns are never reached from valid inputs.
  std::vector<VecXc> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  for (int col : defined) basis.push_back(u.col(col));
  std::vector<int> free_cols;
  for (int col = 0; col < dim; ++col) {
    bool is_defined = false;
    for (int dcol : defined) is_defined |= (col == dcol);
    if (!is_defined) free_cols.push_back(col);
  }
  std::size_t next_free = 0;
  for (int k = 0; k < dim && next_free < free_cols.size(); ++k) {
    VecXc v = VecXc::Zero(dim);
    v(k) = 1.0;
    for (const VecXc& b : basis) v -= b.dot(v) * b;
    const double nrm = v.norm();
    if (nrm < 1e-8) continue;
    v /= nrm;
    basis.push_back(v);
    u.col(free_cols[next_free++]) = v;
  }

  const double unitarity_dev =
      (u.adjoint() * u - MatXc::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (unitarity_dev > 1e-12)
    throw InvalidState("build_bh_unitary: completion failed unitarity check");
  return u;
}

MatXc partial_trace(const MatXc& rho, const std::vector<int>& dims,
                    const std::vector<int>& keep) {
  const int total =
      std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
  if (rho.rows() != total || rho.cols() != total)
    throw DimensionMismatch("partial_trace: factor dimensions do not match the matrix");
  if (keep.empty()) throw DimensionMismatch("partial_trace: keep set must be non-empty");
  for (int k : keep)
    if (k < 0 || k >= static_cast<int>(dims.size()))
      throw DimensionMismatch("partial_trace: keep index out of range");

  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int k : keep) kept[static_cast<std::size_t>(k)] = true;

  int keep_dim = 1, trace_dim = 1;
  for (int f = 0; f < n; ++f) (kept[static_cast<std::size_t>(f)] ? keep_dim : trace_dim) *= dims[static_cast<std::size_t>(f)];

  // Strides of each factor in the full index.
  std::vector<int> stride(static_cast<std::size_t>(n), 1);
  for (int f = n - 2; f >= 0; --f)
    stride[static_cast<std::size_t>(f)] = stride[static_cast<std::size_t>(f + 1)] * dims[static_cast<std::size_t>(f + 1)];

  // Kept/traced factor lists preserve original order.
  std::vector<int> keep_f, trace_f;
  for (int f = 0; f < n; ++f) (kept[static_cast<std::size_t>(f)] ? keep_f : trace_f).push_back(f);

  const auto expand = [&](int packed, const std::vector<int>& factors) {
    int offset = 0;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const int d = dims[static_cast<std::size_t>(*it)];
      offset += (packed % d) * stride[static_cast<std::size_t>(*it)];
      packed /= d;
    }
    return offset;
  };

  MatXc out = MatXc::Zero(keep_dim, keep_dim);
  for (int r = 0; r < keep_dim; ++r) {
    const int row_base = expand(r, keep_f);
    for (int col = 0; col < keep_dim; ++col) {
      const int col_base = expand(col, keep_f);
      Complex acc = 0.0;
      for (int t = 0; t < trace_dim; ++t) {
        const int tr_off = expand(t, trace_f);
        acc += rho(row_base + tr_off, col_base + tr_off);
      }
      out(r, col) = acc;
    }
  }
  return out;
}

namespace {

MatXc embed_operator(const MatXc& op, const std::vector<int>& dims,
                     const std::vector<int>& positions) {
  const int total =
      std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
  const int n = static_cast<int>(dims.size());
  std::vector<int> op_dims;
  for (int p : positions) op_dims.push_back(dims[static_cast<std::size_t>(p)]);

  std::vector<bool> acted(static_cast<std::size_t>(n), false);
  for (int p : positions) acted[static_cast<std::size_t>(p)] = true;

  std::vector<int> digits_r(static_cast<std::size_t>(n)), digits_c(static_cast<std::size_t>(n));
  const auto decode = [&](int packed, std::vector<int>& digits) {
    for (int f = n - 1; f >= 0; --f) {
      digits[static_cast<std::size_t>(f)] = packed % dims[static_cast<std::size_t>(f)];
      packed /= dims[static_cast<std::size_t>(f)];
    }
  };

  MatXc out = MatXc::Zero(total, total);
  for (int r = 0; r < total; ++r) {
    decode(r, digits_r);
    for (int col = 0; col < total; ++col) {
      decode(col, digits_c);
      bool identity_ok = true;
      for (int f = 0; f < n && identity_ok; ++f)
        if (!acted[static_cast<std::size_t>(f)]) identity_ok = digits_r[static_cast<std::size_t>(f)] == digits_c[static_cast<std::size_t>(f)];
      if (!identity_ok) continue;
      int op_r = 0, op_c = 0;
      for (std::size_t k = 0; k < positions.size(); ++k) {
        op_r = op_r * op_dims[k] + digits_r[static_cast<std::size_t>(positions[k])];
        op_c = op_c * op_dims[k] + digits_c[static_cast<std::size_t>(positions[k])];
      }
      out(r, col) = op(op_r, op_c);
    }
  }
  return out;
}

MatXc projector_on_first_basis_vector(int dim) {
  MatXc p = MatXc::Zero(dim, dim);
  p(0, 0) = 1.0;
  return p;
}

}  // namespace

CloneOutputs clone_oracle(const BlochState& s, const ClonerSpec& spec) {
  if (spec.dependence != Dependence::StateIndependent)
    throw SpecError("the cloning oracle covers state-independent machines only");
  const Mat4c rho12 = from_bloch(s);
  CloneOutputs out;
  out.locality = spec.locality;

  if (spec.locality == Locality::Local) {
    // Factor order (q1, q2, q3, q4, machineA, machineB); U_A copies 1 -> 3,
    // U_B copies 2 -> 4.
    const std::vector<int> dims{2, 2, 2, 2, 2, 2};
    const MatXc u_single = build_bh_unitary(spec);
    const MatXc u = embed_operator(u_single, dims, {0, 2, 4}) *
                    embed_operator(u_single, dims, {1, 3, 5});
    MatXc rho = kron(rho12, projector_on_first_basis_vector(2));
    rho = kron(rho, projector_on_first_basis_vector(2));
    rho = kron(rho, projector_on_first_basis_vector(2));
    rho = kron(rho, projector_on_first_basis_vector(2));
    const MatXc rho_out = u * rho * u.adjoint();
    out.side_a = to_bloch(partial_trace(rho_out, dims, {0, 2}));
    out.side_b = to_bloch(partial_trace(rho_out, dims, {1, 3}));
    out.cross_a = to_bloch(partial_trace(rho_out, dims, {0, 3}));
    // Pair (2,3) reported with A's qubit first, matching the 14 = 23
    // identification: extract (q2,q3) and relabel.
    out.cross_b = swap_subsystems(to_bloch(partial_trace(rho_out, dims, {1, 2})));
  } else {
    // Factor order (q1, q2, q3, q4, machine4); the pair (q1,q2) is the
    // input register and (q3,q4) the blank register of the M = 4 machine.
    const std::vector<int> dims{2, 2, 2, 2, 4};
    const MatXc u = build_bh_unitary(spec);  // 64x64, matching this order
    MatXc rho = kron(rho12, projector_on_first_basis_vector(4));
    rho = kron(rho, projector_on_first_basis_vector(4));
    const MatXc rho_out = u * rho * u.adjoint();
    out.cross_a = to_bloch(partial_trace(rho_out, dims, {0, 1}));
    out.cross_b = to_bloch(partial_trace(rho_out, dims, {2, 3}));
    out.side_a = to_bloch(partial_trace(rho_out, dims, {0, 2}));
    out.side_b = to_bloch(partial_trace(rho_out, dims, {1, 3}));
  }
  return out;
}

}  // namespace qbroadcast
