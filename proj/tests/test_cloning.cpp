#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbroadcast/cloning.hpp"
#include "qbroadcast/random.hpp"

#include <cmath>

using namespace qbroadcast;

namespace {

BlochState phi_plus() {
  BlochState s;
  s.T = Vec3(1.0, -1.0, 1.0).asDiagonal();
  return s;
}

double max_output_diff(const CloneOutputs& a, const CloneOutputs& b) {
  double d = max_component_diff(a.side_a, b.side_a);
  d = std::max(d, max_component_diff(a.side_b, b.side_b));
  d = std::max(d, max_component_diff(a.cross_a, b.cross_a));
  d = std::max(d, max_component_diff(a.cross_b, b.cross_b));
  return d;
}

}  // namespace

TEST_CASE("ClonerSpec invariants") {
  CHECK(ClonerSpec::local_si().machine_dim() == 2);
  CHECK(ClonerSpec::nonlocal_si().machine_dim() == 4);
  CHECK(ClonerSpec::local_sd(0.25).mu() == doctest::Approx(0.5));
  CHECK(ClonerSpec::nonlocal_sd(0.1).mu() == doctest::Approx(0.6));
  CHECK(ClonerSpec::local_sd(1.0 / 6.0).reduces_to_si());
  CHECK(ClonerSpec::nonlocal_sd(0.1).reduces_to_si());
  CHECK_FALSE(ClonerSpec::local_sd(0.3).reduces_to_si());
  CHECK_THROWS_AS(ClonerSpec::local_sd(0.51), SpecError);
  CHECK_THROWS_AS(ClonerSpec::local_sd(-0.01), SpecError);
  CHECK_THROWS_AS(ClonerSpec::nonlocal_sd(0.26), SpecError);
}

TEST_CASE("closed form, Phi+ through the local SI cloner") {
  const CloneOutputs out = clone_closed_form(phi_plus(), ClonerSpec::local_si());
  CHECK(out.cross_a.x.cwiseAbs().maxCoeff() == 0.0);
  CHECK((out.cross_a.T - Mat3(Vec3(4.0 / 9, -4.0 / 9, 4.0 / 9).asDiagonal()))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  CHECK((out.side_a.T - Mat3::Identity() / 3.0).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(max_component_diff(out.cross_a, out.cross_b) == 0.0);
}

TEST_CASE("closed form, maximally mixed input stays uncorrelated") {
  const BlochState mixed{};
  for (const auto& spec :
       {ClonerSpec::local_si(), ClonerSpec::nonlocal_si(), ClonerSpec::local_sd(0.2),
        ClonerSpec::nonlocal_sd(0.2)}) {
    const CloneOutputs out = clone_closed_form(mixed, spec);
    CHECK(out.side_a.x.cwiseAbs().maxCoeff() == 0.0);
    CHECK(out.cross_a.x.cwiseAbs().maxCoeff() == 0.0);
    CHECK(out.cross_a.y.cwiseAbs().maxCoeff() == 0.0);
  }
  // Local SI cross pair of the maximally mixed input is maximally mixed.
  const CloneOutputs out = clone_closed_form(mixed, ClonerSpec::local_si());
  CHECK(out.cross_a.T.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state-dependent cloners reduce to state-independent ones") {
  Rng rng;
  for (int k = 0; k < 100; ++k) {
    const BlochState s = random_bloch_state(rng);
    CHECK(max_output_diff(clone_closed_form(s, ClonerSpec::local_sd(1.0 / 6.0)),
                          clone_closed_form(s, ClonerSpec::local_si())) < 1e-12);
    CHECK(max_output_diff(clone_closed_form(s, ClonerSpec::nonlocal_sd(0.1)),
                          clone_closed_form(s, ClonerSpec::nonlocal_si())) < 1e-12);
  }
}

TEST_CASE("outputs contract the input's Bloch data linearly") {
  Rng rng;
  const BlochState s = random_bloch_state(rng);
  const CloneOutputs local = clone_closed_form(s, ClonerSpec::local_si());
  CHECK((local.side_a.x - (2.0 / 3.0) * s.x).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((local.cross_a.T - (4.0 / 9.0) * s.T).cwiseAbs().maxCoeff() < 1e-15);
  const CloneOutputs nonlocal = clone_closed_form(s, ClonerSpec::nonlocal_si());
  CHECK((nonlocal.cross_a.T - 0.6 * s.T).cwiseAbs().maxCoeff() < 1e-15);
  const CloneOutputs sd = clone_closed_form(s, ClonerSpec::local_sd(0.3));
  CHECK((sd.side_b.y - 0.4 * s.y).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((sd.cross_a.T - 0.16 * s.T).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("BH unitary columns and unitarity") {
  SUBCASE("local: U|0>|0>|X> = sqrt(2/3)|00>|X11> + sqrt(1/6)(|01>+|10>)|X22>") {
    const MatXc u = build_bh_unitary(ClonerSpec::local_si());
    REQUIRE(u.rows() == 8);
    // Index layout (input, blank, machine), each dim 2.
    const auto idx = [](int in, int blank, int machine) {
      return (in * 2 + blank) * 2 + machine;
    };
    CHECK(u(idx(0, 0, 0), idx(0, 0, 0)).real() == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(u(idx(0, 1, 1), idx(0, 0, 0)).real() == doctest::Approx(std::sqrt(1.0 / 6.0)));
    CHECK(u(idx(1, 0, 1), idx(0, 0, 0)).real() == doctest::Approx(std::sqrt(1.0 / 6.0)));
    CHECK(std::abs(u(idx(1, 1, 0), idx(0, 0, 0))) < 1e-15);
    CHECK((u.adjoint() * u - MatXc::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("nonlocal amplitudes sqrt(2/5) and sqrt(1/10)") {
    const MatXc u = build_bh_unitary(ClonerSpec::nonlocal_si());
    REQUIRE(u.rows() == 64);
    const auto idx = [](int in, int blank, int machine) {
      return (in * 4 + blank) * 4 + machine;
    };
    CHECK(u(idx(0, 0, 0), idx(0, 0, 0)).real() == doctest::Approx(std::sqrt(0.4)));
    for (int j = 1; j < 4; ++j) {
      CHECK(u(idx(0, j, j), idx(0, 0, 0)).real() == doctest::Approx(std::sqrt(0.1)));
      CHECK(u(idx(j, 0, j), idx(0, 0, 0)).real() == doctest::Approx(std::sqrt(0.1)));
    }
    CHECK((u.adjoint() * u - MatXc::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("state-dependent specs are rejected") {
    CHECK_THROWS_AS(build_bh_unitary(ClonerSpec::local_sd(0.2)), SpecError);
    CHECK_THROWS_AS(clone_oracle(BlochState{}, ClonerSpec::nonlocal_sd(0.2)), SpecError);
  }
}

TEST_CASE("partial_trace") {
  MatXc phi = MatXc::Zero(4, 4);
  phi(0, 0) = phi(3, 3) = phi(0, 3) = phi(3, 0) = 0.5;
  SUBCASE("tr_B of Phi+ is maximally mixed") {
    const MatXc reduced = partial_trace(phi, {2, 2}, {0});
    CHECK((reduced - 0.5 * MatXc::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("keeping everything is the identity operation") {
    CHECK((partial_trace(phi, {2, 2}, {0, 1}) - phi).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("tr_A(|01><01|) = |1><1|") {
    MatXc rho = MatXc::Zero(4, 4);
    rho(1, 1) = 1.0;
    const MatXc reduced = partial_trace(rho, {2, 2}, {1});
    CHECK(reduced(0, 0).real() == doctest::Approx(0.0));
    CHECK(reduced(1, 1).real() == doctest::Approx(1.0));
  }
  SUBCASE("trace preserved") {
    Rng rng;
    const MatXc rho = random_density_matrix(rng);
    CHECK(partial_trace(rho, {2, 2}, {1}).trace().real() == doctest::Approx(1.0));
  }
  SUBCASE("dimension errors") {
    CHECK_THROWS_AS(partial_trace(phi, {2, 3}, {0}), DimensionMismatch);
    CHECK_THROWS_AS(partial_trace(phi, {2, 2}, {}), DimensionMismatch);
    CHECK_THROWS_AS(partial_trace(phi, {2, 2}, {2}), DimensionMismatch);
  }
}

TEST_CASE("oracle matches the closed form") {
  SUBCASE("Phi+ through the local machine") {
    const CloneOutputs oracle = clone_oracle(phi_plus(), ClonerSpec::local_si());
    const CloneOutputs closed = clone_closed_form(phi_plus(), ClonerSpec::local_si());
    CHECK(max_output_diff(oracle, closed) < 1e-12);
  }
  SUBCASE("|00> through the local machine lands on {2z/3, 2z/3, I/3}") {
    BlochState ket00;
    ket00.x = ket00.y = Vec3(0, 0, 1);
    ket00.T = Vec3(0, 0, 1).asDiagonal();
    const CloneOutputs oracle = clone_oracle(ket00, ClonerSpec::local_si());
    CHECK((oracle.side_a.x - Vec3(0, 0, 2.0 / 3.0)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((oracle.side_a.T - Mat3::Identity() / 3.0).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("maximally mixed through the nonlocal machine stays maximally mixed") {
    const CloneOutputs oracle = clone_oracle(BlochState{}, ClonerSpec::nonlocal_si());
    CHECK(oracle.cross_a.x.cwiseAbs().maxCoeff() < 1e-13);
    CHECK(oracle.cross_a.T.cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("random states, both machines") {
    Rng rng;
    for (int k = 0; k < 25; ++k) {
      const BlochState s = random_bloch_state(rng);
      for (const auto& spec : {ClonerSpec::local_si(), ClonerSpec::nonlocal_si()}) {
        CHECK(max_output_diff(clone_oracle(s, spec), clone_closed_form(s, spec)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("outputs are valid density operators across the lambda intervals") {
  // The paper's example families (Bloch vectors along z) keep the
  // state-dependent side outputs physical over the whole interval.
  std::vector<BlochState> inputs;
  for (double v : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    inputs.push_back(pure_schmidt(v));
    inputs.push_back(werner_like({v, 0.3}));
  }
  inputs.push_back(bell_diagonal({-0.8, -0.8, -0.8}));

  for (double lm = 0.0; lm <= 0.5 + 1e-12; lm += 0.01) {
    const ClonerSpec spec = ClonerSpec::local_sd(std::min(lm, 0.5));
    for (const BlochState& s : inputs) {
      const CloneOutputs out = clone_closed_form(s, spec);
      for (const auto& [label, state] : out.labeled()) {
        CAPTURE(label);
        CHECK(validate(from_bloch(state)).min_eigenvalue >= -1e-10);
      }
    }
  }
  for (double lm = 0.0; lm <= 0.25 + 1e-12; lm += 0.01) {
    const ClonerSpec spec = ClonerSpec::nonlocal_sd(std::min(lm, 0.25));
    for (const BlochState& s : inputs) {
      const CloneOutputs out = clone_closed_form(s, spec);
      for (const auto& [label, state] : out.labeled()) {
        CAPTURE(label);
        CHECK(validate(from_bloch(state)).min_eigenvalue >= -1e-10);
      }
    }
  }
  // State-independent outputs are physical for arbitrary valid inputs.
  Rng rng;
  for (int k = 0; k < 20; ++k) {
    const BlochState s = random_bloch_state(rng);
    for (const auto& spec : {ClonerSpec::local_si(), ClonerSpec::nonlocal_si()}) {
      for (const auto& [label, state] : clone_closed_form(s, spec).labeled()) {
        CAPTURE(label);
        CHECK(validate(from_bloch(state)).min_eigenvalue >= -1e-10);
      }
    }
  }
}

TEST_CASE("pair labels") {
  const CloneOutputs local = clone_closed_form(phi_plus(), ClonerSpec::local_si());
  const auto local_labels = local.labeled();
  CHECK(local_labels[0].first == "13");
  CHECK(local_labels[2].first == "14");
  const CloneOutputs nonlocal = clone_closed_form(phi_plus(), ClonerSpec::nonlocal_si());
  const auto nonlocal_labels = nonlocal.labeled();
  CHECK(nonlocal_labels[0].first == "12");
  CHECK(nonlocal_labels[3].first == "24");
}
