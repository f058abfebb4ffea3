#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbroadcast/broadcast.hpp"
#include "qbroadcast/random.hpp"

#include <cmath>
#include <map>

using namespace qbroadcast;

namespace {

BlochState phi_plus() {
  BlochState s;
  s.T = Vec3(1.0, -1.0, 1.0).asDiagonal();
  return s;
}

}  // namespace

TEST_CASE("classify_entanglement_broadcast") {
  SUBCASE("Werner-like p=1, alpha^2=0.5 broadcasts optimally through the local cloner") {
    const BroadcastVerdict v =
        classify_entanglement_broadcast(werner_like({1.0, 0.5}), ClonerSpec::local_si());
    CHECK(v.broadcastable);
    CHECK(v.optimally_broadcastable);
    CHECK(v.side_pairs_separable);
  }
  SUBCASE("Werner-like p=0.5 never broadcasts locally (threshold 3/4)") {
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const BroadcastVerdict v = classify_entanglement_broadcast(werner_like({0.5, a}),
                                                                 ClonerSpec::local_si());
      CHECK_FALSE(v.broadcastable);
    }
  }
  SUBCASE("maximally mixed input never broadcasts") {
    for (const auto& spec : {ClonerSpec::local_si(), ClonerSpec::nonlocal_si(),
                             ClonerSpec::local_sd(0.2), ClonerSpec::nonlocal_sd(0.2)}) {
      CHECK_FALSE(classify_entanglement_broadcast(BlochState{}, spec).broadcastable);
    }
  }
  SUBCASE("verdict invariants") {
    Rng rng;
    for (int k = 0; k < 100; ++k) {
      const BroadcastVerdict v = classify_entanglement_broadcast(
          random_bloch_state(rng),
          (k % 2 == 0) ? ClonerSpec::local_si() : ClonerSpec::nonlocal_si());
      CHECK(v.broadcastable == v.cross_pairs_entangled);
      CHECK(v.optimally_broadcastable == (v.cross_pairs_entangled && v.side_pairs_separable));
      if (v.optimally_broadcastable) CHECK(v.broadcastable);
    }
  }
}

TEST_CASE("classify_qcsbe_broadcast") {
  SUBCASE("Phi+ broadcasts QCsbE through the local SI cloner, but not optimally") {
    const BroadcastVerdict v =
        classify_qcsbe_broadcast(phi_plus(), ClonerSpec::local_si());
    CHECK(v.broadcastable);
    CHECK_FALSE(v.optimally_broadcastable);
    CHECK(v.discord_side == doctest::Approx(1.0 / 18.0));
  }
  SUBCASE("maximally mixed: side discord 1/18, cross discord 0, no broadcast") {
    const BroadcastVerdict v =
        classify_qcsbe_broadcast(BlochState{}, ClonerSpec::local_si());
    CHECK(v.discord_side == doctest::Approx(1.0 / 18.0));
    CHECK(v.discord_cross == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(v.broadcastable);
  }
  SUBCASE("no optimal QCsbE broadcast for any SD lambda on entangled inputs") {
    const std::vector<BlochState> inputs{phi_plus(), pure_schmidt(0.3),
                                         werner_like({0.9, 0.5})};
    for (double lm : {0.05, 0.1, 1.0 / 6.0, 0.25, 0.4, 0.5}) {
      for (const BlochState& s : inputs)
        CHECK_FALSE(classify_qcsbe_broadcast(s, ClonerSpec::local_sd(lm))
                        .optimally_broadcastable);
    }
    for (double lm : {0.01, 0.1, 0.2, 0.25}) {
      for (const BlochState& s : inputs)
        CHECK_FALSE(classify_qcsbe_broadcast(s, ClonerSpec::nonlocal_sd(lm))
                        .optimally_broadcastable);
    }
  }
}

TEST_CASE("pure_state_range") {
  const Range local = pure_state_range(Locality::Local);
  CHECK(local.lower == doctest::Approx((8.0 - std::sqrt(39.0)) / 16.0));
  CHECK(local.lower == doctest::Approx(0.1098).epsilon(1e-3));
  CHECK(local.upper == doctest::Approx(0.8902).epsilon(1e-3));
  const Range nonlocal = pure_state_range(Locality::Nonlocal);
  CHECK(nonlocal.lower == doctest::Approx(0.0286).epsilon(1e-2));
  CHECK(nonlocal.upper == doctest::Approx((3.0 + 2.0 * std::sqrt(2.0)) / 6.0));

  SUBCASE("bisection on the numeric classifier reproduces both") {
    const Range lb = pure_state_range_bisect(Locality::Local);
    CHECK(std::abs(lb.lower - local.lower) < 1e-4);
    CHECK(std::abs(lb.upper - local.upper) < 1e-4);
    const Range nb = pure_state_range_bisect(Locality::Nonlocal);
    CHECK(std::abs(nb.lower - nonlocal.lower) < 1e-4);
    CHECK(std::abs(nb.upper - nonlocal.upper) < 1e-4);
  }
}

TEST_CASE("werner_range") {
  SUBCASE("local p=0.9 gives (0.17, 0.83)") {
    const auto r = werner_range(Locality::Local, 0.9);
    REQUIRE(r.has_value());
    CHECK(std::abs(r->lower - 0.17) < 0.005);
    CHECK(std::abs(r->upper - 0.83) < 0.005);
  }
  SUBCASE("nonlocal p=1 gives (0.03, 0.97)") {
    const auto r = werner_range(Locality::Nonlocal, 1.0);
    REQUIRE(r.has_value());
    CHECK(std::abs(r->lower - 0.03) < 0.005);
    CHECK(std::abs(r->upper - 0.97) < 0.005);
  }
  SUBCASE("local empty at and below p=3/4") {
    CHECK_FALSE(werner_range(Locality::Local, 0.5).has_value());
    CHECK_FALSE(werner_range(Locality::Local, 0.75).has_value());
    CHECK(werner_range(Locality::Local, 0.76).has_value());
  }
  SUBCASE("nonlocal empty at and below p=5/9") {
    CHECK_FALSE(werner_range(Locality::Nonlocal, 5.0 / 9.0).has_value());
    CHECK(werner_range(Locality::Nonlocal, 0.57).has_value());
  }
  SUBCASE("closed form matches bisection within 1e-4") {
    for (double p : {0.8, 0.9, 1.0}) {
      const auto closed = werner_range(Locality::Local, p);
      const auto numeric = werner_range_bisect(Locality::Local, p);
      REQUIRE(closed.has_value());
      REQUIRE(numeric.has_value());
      CHECK(std::abs(closed->lower - numeric->lower) < 1e-4);
      CHECK(std::abs(closed->upper - numeric->upper) < 1e-4);
    }
    for (double p : {0.6, 0.85, 1.0}) {
      const auto closed = werner_range(Locality::Nonlocal, p);
      const auto numeric = werner_range_bisect(Locality::Nonlocal, p);
      REQUIRE(closed.has_value());
      REQUIRE(numeric.has_value());
      CHECK(std::abs(closed->lower - numeric->lower) < 1e-4);
      CHECK(std::abs(closed->upper - numeric->upper) < 1e-4);
    }
  }
  SUBCASE("domain error") {
    CHECK_THROWS_AS(werner_range(Locality::Local, 1.5), DomainError);
  }
}

TEST_CASE("werner_threshold") {
  SUBCASE("local alpha^2=0.2 -> 0.87") {
    const auto t = werner_threshold(Locality::Local, 0.2);
    REQUIRE(t.has_value());
    CHECK(std::abs(*t - 0.87) < 0.005);
  }
  SUBCASE("local alpha^2=0.5 -> 3/4") {
    const auto t = werner_threshold(Locality::Local, 0.5);
    REQUIRE(t.has_value());
    CHECK(std::abs(*t - 0.75) < 5e-4);
  }
  SUBCASE("nonlocal alpha^2=0.4 -> 0.56") {
    const auto t = werner_threshold(Locality::Nonlocal, 0.4);
    REQUIRE(t.has_value());
    CHECK(std::abs(*t - 0.5631) < 0.005);
  }
  SUBCASE("empty when even p=1 cannot broadcast") {
    CHECK_FALSE(werner_threshold(Locality::Local, 0.0).has_value());
    CHECK_FALSE(werner_threshold(Locality::Local, 0.05).has_value());
  }
}

TEST_CASE("bell_condition") {
  SUBCASE("local (-7/8,-7/8,-7/8) broadcastable") {
    CHECK(bell_condition(Locality::Local, {-0.875, -0.875, -0.875}));
  }
  SUBCASE("nonlocal (-7/9,-7/9,-3/4) broadcastable") {
    CHECK(bell_condition(Locality::Nonlocal, {-7.0 / 9.0, -7.0 / 9.0, -0.75}));
  }
  SUBCASE("(0.3,0.3,0.3) inside the octahedron is not") {
    CHECK_FALSE(bell_condition(Locality::Local, {0.3, 0.3, 0.3}));
    CHECK_FALSE(bell_condition(Locality::Nonlocal, {0.3, 0.3, 0.3}));
  }
  SUBCASE("closed-form transcriptions agree near the vertices") {
    CHECK(bell_condition_closed_form(Locality::Local, {-0.9, -0.9, -0.9}));
    CHECK(bell_condition_closed_form(Locality::Nonlocal, {-0.9, -0.9, -0.9}));
    CHECK_FALSE(bell_condition_closed_form(Locality::Local, {0.3, 0.3, 0.3}));
    CHECK_FALSE(bell_condition_closed_form(Locality::Nonlocal, {0.3, 0.3, 0.3}));
  }
}

TEST_CASE("scan") {
  SUBCASE("resolution below 16 is rejected") {
    CHECK_THROWS_AS(scan(Family::PureSchmidt, ClonerSpec::local_si(), 8), DomainError);
  }
  SUBCASE("werner local: broadcastable region sits above p=3/4, symmetric in alpha^2") {
    const ScanReport report = scan(Family::WernerLike, ClonerSpec::local_si(), 17);
    CHECK(report.rows.size() == 17 * 17);
    std::map<std::pair<double, double>, bool> verdicts;
    for (const auto& row : report.rows) {
      if (row.verdict.broadcastable) CHECK(row.params[0] > 0.75);
      verdicts[{row.params[0], row.params[1]}] = row.verdict.broadcastable;
    }
    for (const auto& [key, broadcastable] : verdicts) {
      const auto mirrored = verdicts.find({key.first, 1.0 - key.second});
      REQUIRE(mirrored != verdicts.end());
      CHECK(mirrored->second == broadcastable);
    }
  }
  SUBCASE("werner local: broadcastability is monotone in p at fixed alpha^2") {
    const ScanReport report = scan(Family::WernerLike, ClonerSpec::local_si(), 33);
    std::map<double, std::vector<std::pair<double, bool>>> by_alpha;
    for (const auto& row : report.rows)
      by_alpha[row.params[1]].push_back({row.params[0], row.verdict.broadcastable});
    for (auto& [alpha, column] : by_alpha) {
      bool seen = false;
      for (const auto& [p, broadcastable] : column) {
        if (seen) CHECK(broadcastable);
        seen = seen || broadcastable;
      }
    }
  }
  SUBCASE("bell local: regions avoid the octahedron and keep the vertices") {
    const ScanReport report = scan(Family::BellDiagonal, ClonerSpec::local_si(), 16);
    int vertex_hits = 0;
    for (const auto& row : report.rows) {
      const double sum = std::abs(row.params[0]) + std::abs(row.params[1]) +
                         std::abs(row.params[2]);
      if (row.verdict.broadcastable) {
        CHECK(sum > 1.0 + 1e-9);
        CHECK(row.verdict.side_pairs_separable);  // sides are input-independent
      }
      if (sum == 3.0) {
        CHECK(row.verdict.broadcastable);
        ++vertex_hits;
      }
    }
    CHECK(vertex_hits == 4);
  }
  SUBCASE("nonlocal werner region contains the local one pointwise") {
    const ScanReport local = scan(Family::WernerLike, ClonerSpec::local_si(), 24);
    const ScanReport nonlocal = scan(Family::WernerLike, ClonerSpec::nonlocal_si(), 24);
    REQUIRE(local.rows.size() == nonlocal.rows.size());
    bool strict = false;
    for (std::size_t i = 0; i < local.rows.size(); ++i) {
      if (local.rows[i].verdict.broadcastable)
        CHECK(nonlocal.rows[i].verdict.broadcastable);
      strict |= nonlocal.rows[i].verdict.broadcastable &&
                !local.rows[i].verdict.broadcastable;
    }
    CHECK(strict);
  }
  SUBCASE("pure-family scan brackets the closed-form endpoints") {
    const ScanReport report = scan(Family::PureSchmidt, ClonerSpec::local_si(), 257);
    const Range expected = pure_state_range(Locality::Local);
    double first = 1.0, last = 0.0;
    for (const auto& row : report.rows) {
      if (row.verdict.broadcastable) {
        first = std::min(first, row.params[0]);
        last = std::max(last, row.params[0]);
      }
    }
    const double step = report.step_sizes[0];
    CHECK(std::abs(first - expected.lower) <= step);
    CHECK(std::abs(last - expected.upper) <= step);
  }
  SUBCASE("QCsbE optimal broadcasting fails at every grid point") {
    // lambda = 0 is excluded: there the state-dependent map degenerates to
    // the identity wire (cross pair equals the input, sides are classical).
    for (double s = 0.0; s <= 1.0; s += 1.0 / 16.0) {
      for (double lm : {1e-3, 0.1, 0.25, 0.5})
        CHECK_FALSE(classify_qcsbe_broadcast(pure_schmidt(s), ClonerSpec::local_sd(lm))
                        .optimally_broadcastable);
      CHECK_FALSE(classify_qcsbe_broadcast(pure_schmidt(s), ClonerSpec::local_si())
                      .optimally_broadcastable);
      CHECK_FALSE(classify_qcsbe_broadcast(pure_schmidt(s), ClonerSpec::nonlocal_si())
                      .optimally_broadcastable);
    }
  }
}
