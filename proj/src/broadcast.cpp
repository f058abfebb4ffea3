#include "qbroadcast/broadcast.hpp"

#include "qbroadcast/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace qbroadcast {

namespace {

struct PairData {
  SeparabilityVerdict cross;
  SeparabilityVerdict side_a;
  SeparabilityVerdict side_b;
  double discord_cross = 0.0;
  double discord_side = 0.0;
};

PairData analyze_outputs(const CloneOutputs& outputs) {
  PairData data;
  data.cross = is_separable(from_bloch(outputs.cross_a));
  data.side_a = is_separable(from_bloch(outputs.side_a));
  data.side_b = is_separable(from_bloch(outputs.side_b));
  data.discord_cross = geometric_discord(outputs.cross_a).value;
  data.discord_side = std::max(geometric_discord(outputs.side_a).value,
                               geometric_discord(outputs.side_b).value);
  return data;
}

}  // namespace

BroadcastVerdict classify_entanglement_broadcast(const BlochState& s,
                                                 const ClonerSpec& spec) {
  const PairData data = analyze_outputs(clone_closed_form(s, spec));
  BroadcastVerdict verdict;
  verdict.cross_pairs_entangled = !data.cross.separable;
  verdict.side_pairs_separable = data.side_a.separable && data.side_b.separable;
  verdict.broadcastable = verdict.cross_pairs_entangled;
  verdict.optimally_broadcastable =
      verdict.cross_pairs_entangled && verdict.side_pairs_separable;
  verdict.discord_cross = data.discord_cross;
  verdict.discord_side = data.discord_side;
  return verdict;
}

BroadcastVerdict classify_qcsbe_broadcast(const BlochState& s, const ClonerSpec& spec) {
  const CloneOutputs outputs = clone_closed_form(s, spec);
  BroadcastVerdict verdict;
  verdict.discord_cross = geometric_discord(outputs.cross_a).value;
  verdict.discord_side = std::max(geometric_discord(outputs.side_a).value,
                                  geometric_discord(outputs.side_b).value);
  verdict.cross_pairs_entangled = verdict.discord_cross > kDiscordTol;
  verdict.side_pairs_separable = verdict.discord_side <= kDiscordTol;
  verdict.broadcastable = verdict.cross_pairs_entangled;
  verdict.optimally_broadcastable =
      verdict.cross_pairs_entangled && verdict.side_pairs_separable;
  return verdict;
}

Range pure_state_range(Locality locality) {
  if (locality == Locality::Local) {
    const double r = std::sqrt(39.0) / 16.0;
    return {0.5 - r, 0.5 + r};
  }
  const double r = std::sqrt(2.0) / 3.0;
  return {0.5 - r, 0.5 + r};
}

std::optional<Range> werner_range(Locality locality, double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("werner_range: p must lie in [0,1]");
  double radicand;
  if (locality == Locality::Local)
    radicand = (48.0 * p * p + 72.0 * p - 81.0) / (256.0 * p * p);
  else
    radicand = (27.0 * p * p + 30.0 * p - 25.0) / (144.0 * p * p);
  if (!(radicand > 0.0)) return std::nullopt;
  const double r = std::sqrt(radicand);
  return Range{0.5 - r, 0.5 + r};
}

namespace {

bool werner_broadcastable(Locality locality, double p, double alpha_sq) {
  const ClonerSpec spec = locality == Locality::Local ? ClonerSpec::local_si()
                                                      : ClonerSpec::nonlocal_si();
  return classify_entanglement_broadcast(werner_like({p, alpha_sq}), spec).broadcastable;
}

// Bisects f over [lo, hi] assuming f(lo) != f(hi); returns the flip point.
template <class F>
double bisect(F&& f, double lo, double hi, bool at_lo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) == at_lo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<double> werner_threshold(Locality locality, double alpha_sq) {
  if (alpha_sq < 0.0 || alpha_sq > 1.0)
    throw DomainError("werner_threshold: alpha^2 must lie in [0,1]");
  if (!werner_broadcastable(locality, 1.0, alpha_sq)) return std::nullopt;
  // Broadcastability is monotone in p at fixed alpha^2; p = 0 never
  // broadcasts (maximally mixed input).
  return bisect([&](double p) { return werner_broadcastable(locality, p, alpha_sq); },
                0.0, 1.0, false, 1e-4);
}

bool bell_condition(Locality locality, const BellDiagParams& params) {
  const ClonerSpec spec = locality == Locality::Local ? ClonerSpec::local_si()
                                                      : ClonerSpec::nonlocal_si();
  return classify_entanglement_broadcast(bell_diagonal(params), spec).broadcastable;
}

bool bell_condition_closed_form(Locality locality, const BellDiagParams& params) {
  const double c1 = params.c1, c2 = params.c2, c3 = params.c3;
  const double gamma = c1 + c2 + c3;
  if (locality == Locality::Local) {
    const double c_plus = -9.0 / 4.0 + (c1 + c3);
    const double c_minus = 9.0 / 4.0 - (c1 - c3);
    const bool left = (c1 >= -1.0 && c1 < -0.25) &&
                      (gamma < -9.0 / 4.0 || (9.0 / 2.0 - c_minus < c2 && c2 <= 1.0));
    const bool right = (c1 > 0.25 && c1 <= 1.0) &&
                       ((c_minus < c2 && c2 <= 1.0) || (-1.0 <= c2 && c2 < c_plus));
    return left || right;
  }
  const double first = (6.0 * c1 - 3.0 * gamma + 5.0) * (3.0 * gamma - 6.0 * c3 - 5.0) *
                       (3.0 * gamma - 6.0 * c2 - 5.0) * (3.0 * gamma + 5.0);
  const double second =
      (3.0 * c3 + 5.0) * ((5.0 - 3.0 * c3) * (5.0 - 3.0 * c3) -
                          9.0 * (c1 - c2) * (c1 - c2));
  return first < 0.0 || second < 0.0;
}

Range pure_state_range_bisect(Locality locality, double tol) {
  const ClonerSpec spec = locality == Locality::Local ? ClonerSpec::local_si()
                                                      : ClonerSpec::nonlocal_si();
  const auto broadcastable = [&](double s) {
    return classify_entanglement_broadcast(pure_schmidt(s), spec).broadcastable;
  };
  // Broadcastable in an interval around s = 1/2, not at the endpoints.
  Range range;
  range.lower = bisect(broadcastable, 0.0, 0.5, false, tol);
  range.upper = bisect(broadcastable, 0.5, 1.0, true, tol);
  return range;
}

std::optional<Range> werner_range_bisect(Locality locality, double p, double tol) {
  if (!werner_broadcastable(locality, p, 0.5)) return std::nullopt;
  const auto broadcastable = [&](double a) {
    return werner_broadcastable(locality, p, a);
  };
  Range range;
  range.lower = bisect(broadcastable, 0.0, 0.5, false, tol);
  range.upper = bisect(broadcastable, 0.5, 1.0, true, tol);
  return range;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

}  // namespace

ScanReport scan(Family family, const ClonerSpec& spec, int resolution) {
  if (resolution < 16) throw DomainError("scan: resolution must be >= 16 per axis");
  ScanReport report;
  report.family = family;
  report.spec = spec;
  report.resolution = resolution;

  std::vector<std::vector<double>> grids;
  if (family == Family::WernerLike) {
    report.param_names = {"p", "alpha_sq"};
    grids = {linspace(0.0, 1.0, resolution), linspace(0.0, 1.0, resolution)};
  } else if (family == Family::BellDiagonal) {
    report.param_names = {"c1", "c2", "c3"};
    grids = {linspace(-1.0, 1.0, resolution), linspace(-1.0, 1.0, resolution),
             linspace(-1.0, 1.0, resolution)};
  } else {
    report.param_names = {"s"};
    grids = {linspace(0.0, 1.0, resolution)};
  }
  for (const auto& g : grids) report.step_sizes.push_back(g[1] - g[0]);

  // Row-major enumeration of the grid, filtered to valid states.
  std::vector<std::vector<double>> points;
  if (family == Family::WernerLike) {
    for (double p : grids[0])
      for (double a : grids[1]) points.push_back({p, a});
  } else if (family == Family::BellDiagonal) {
    for (double c1 : grids[0])
      for (double c2 : grids[1])
        for (double c3 : grids[2]) {
          const auto lm = bell_eigenvalues({c1, c2, c3});
          if (*std::min_element(lm.begin(), lm.end()) >= -1e-12)
            points.push_back({c1, c2, c3});
        }
  } else {
    for (double s : grids[0]) points.push_back({s});
  }

  report.rows.resize(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const auto& prm = points[i];
    BlochState state;
    if (family == Family::WernerLike)
      state = werner_like({prm[0], prm[1]});
    else if (family == Family::BellDiagonal)
      state = bell_diagonal({prm[0], prm[1], prm[2]});
    else
      state = pure_schmidt(prm[0]);
    report.rows[i] = {prm, classify_entanglement_broadcast(state, spec)};
  });
  return report;
}

const char* family_name(Family family) {
  switch (family) {
    case Family::WernerLike: return "werner";
    case Family::BellDiagonal: return "bell";
    case Family::PureSchmidt: return "pure";
  }
  return "unknown";
}

const char* locality_name(Locality locality) {
  return locality == Locality::Local ? "local" : "nonlocal";
}

const char* dependence_name(Dependence dependence) {
  return dependence == Dependence::StateIndependent ? "si" : "sd";
}

}  // namespace qbroadcast
