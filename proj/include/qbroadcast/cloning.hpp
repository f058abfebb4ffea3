// Buzek-Hillery 1->2 cloning of a two-qubit state, two ways: exact
// closed-form output maps on the Bloch data, and a brute-force unitary
// oracle on the full input+blank+machine Hilbert space.
#pragma once

#include "qbroadcast/state_algebra.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qbroadcast {

enum class Locality { Local, Nonlocal };
enum class Dependence { StateIndependent, StateDependent };

/// Machine selector. State-independent cloners have fixed coefficients
/// c = sqrt(2/(M+1)), d = sqrt(1/(2(M+1))) with M = 2 (local) or 4
/// (nonlocal). State-dependent cloners carry the machine parameter lambda,
/// with mu = 1-2*lambda (local, lambda in [0,1/2]) or mu = 1-4*lambda
/// (nonlocal, lambda in [0,1/4]).
struct ClonerSpec {
  Locality locality = Locality::Local;
  Dependence dependence = Dependence::StateIndependent;
  std::optional<double> lambda;

  static ClonerSpec local_si();
  static ClonerSpec nonlocal_si();
  static ClonerSpec local_sd(double lambda);
  static ClonerSpec nonlocal_sd(double lambda);

  /// Number of basis states the machine copies (2 local, 4 nonlocal).
  int machine_dim() const { return locality == Locality::Local ? 2 : 4; }
  double mu() const;
  /// True when a state-dependent lambda coincides with the state-independent
  /// machine (lambda = 1/6 local, 1/10 nonlocal).
  bool reduces_to_si() const;
};

/// The four labeled reduced pairs of one cloning run. Side pairs are the
/// original/copy pairs on one side, cross pairs carry the broadcast
/// correlations. Local: sides {13,24}, cross {14,23}. Nonlocal: sides
/// {13,24}, cross (desired) {12,34}. Cross pairs are equal by construction.
struct CloneOutputs {
  Locality locality = Locality::Local;
  BlochState side_a, side_b;
  BlochState cross_a, cross_b;

  std::array<std::pair<std::string_view, BlochState>, 4> labeled() const;
};

/// Closed-form output maps (SI: 2/3 and 4/9 local, 3/5 nonlocal; SD: mu
/// scalings with side correlation diag(2l,2l,1-4l) local or diag(2l,2l,1-8l)
/// nonlocal). The local SD cross pair scales T by mu^2, one factor of mu per
/// side, so that lambda = 1/6 reproduces the SI cloner exactly.
CloneOutputs clone_closed_form(const BlochState& s, const ClonerSpec& spec);

/// The full cloning unitary on input x blank x machine (8x8 local, 64x64
/// nonlocal). Columns outside the transformation's domain are completed by
/// Gram-Schmidt; state-independent machines only.
MatXc build_bh_unitary(const ClonerSpec& spec);

/// Embeds the input with blank qubits and machines, applies U1 (x) U2
/// (local) or U12 (nonlocal), and partial-traces to every labeled pair.
/// Agrees with clone_closed_form to 1e-12.
CloneOutputs clone_oracle(const BlochState& s, const ClonerSpec& spec);

/// Standard partial trace over the factors not listed in `keep`; kept
/// factors stay in their original relative order.
MatXc partial_trace(const MatXc& rho, const std::vector<int>& dims,
                    const std::vector<int>& keep);

}  // namespace qbroadcast
