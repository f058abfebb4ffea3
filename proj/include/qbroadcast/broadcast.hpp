// Broadcastability classification of cloner outputs, the closed-form
// broadcasting ranges for the pure Schmidt and Werner-like families, the
// Bell-diagonal conditions, and parameter-grid scans.
#pragma once

#include "qbroadcast/correlations.hpp"
#include "qbroadcast/separability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qbroadcast {

struct BroadcastVerdict {
  bool cross_pairs_entangled = false;
  bool side_pairs_separable = false;
  bool broadcastable = false;           // == cross_pairs_entangled
  bool optimally_broadcastable = false;  // == cross entangled and sides separable
  double discord_cross = 0.0;
  double discord_side = 0.0;  // max over the two side pairs
};

/// Clones s, then decides the booleans by the PPT criterion on the cross
/// pairs ({14,23} local, {12,34} nonlocal) and side pairs {13,24}. Discord
/// values of both pairings are reported alongside.
BroadcastVerdict classify_entanglement_broadcast(const BlochState& s,
                                                 const ClonerSpec& spec);

/// Same pairing, booleans from geometric discord: broadcastable iff the
/// cross-pair discord exceeds kDiscordTol, optimal iff additionally the
/// side-pair discord stays below it.
BroadcastVerdict classify_qcsbe_broadcast(const BlochState& s, const ClonerSpec& spec);

struct Range {
  double lower = 0.0;
  double upper = 0.0;
};

/// Closed-form broadcasting interval in the Schmidt coefficient:
/// (8 +- sqrt(39))/16 local, (3 +- 2 sqrt(2))/6 nonlocal.
Range pure_state_range(Locality locality);

/// Closed-form broadcasting interval in alpha^2 for a Werner-like state at
/// mixing p; empty unless p > 3/4 (local) or p > 5/9 (nonlocal). The
/// nonlocal radicand is (27 p^2 + 30 p - 25)/(144 p^2), the form the PPT
/// computation and the quoted table values both satisfy.
std::optional<Range> werner_range(Locality locality, double p);

/// Smallest p such that broadcasting holds on (p, 1] at fixed alpha^2,
/// found by bisection (1e-4) on the numeric classifier; empty if even p = 1
/// does not broadcast.
std::optional<double> werner_threshold(Locality locality, double alpha_sq);

/// Numeric broadcastability of a Bell-diagonal state (the authoritative
/// verdict; closed-form transcriptions below are cross-checks only).
bool bell_condition(Locality locality, const BellDiagParams& params);

/// Literal transcription of the printed Bell-diagonal inseparability
/// conditions, with c+- = -+9/4 +- (c1 +- c3) in the local case.
bool bell_condition_closed_form(Locality locality, const BellDiagParams& params);

/// Bisection counterparts of the closed-form ranges, run on the numeric
/// classifier over the named family.
Range pure_state_range_bisect(Locality locality, double tol = 1e-5);
std::optional<Range> werner_range_bisect(Locality locality, double p, double tol = 1e-5);

enum class Family { WernerLike, BellDiagonal, PureSchmidt };

struct ScanRow {
  std::vector<double> params;
  BroadcastVerdict verdict;
};

struct ScanReport {
  Family family = Family::WernerLike;
  ClonerSpec spec;
  int resolution = 0;
  std::vector<std::string> param_names;
  std::vector<double> step_sizes;
  std::vector<ScanRow> rows;
};

/// Exhaustive row-major grid over the family's parameter domain with
/// entanglement-broadcast verdicts. Werner-like: (p, alpha^2) on [0,1]^2;
/// Bell-diagonal: [-1,1]^3 filtered to the valid tetrahedron; pure Schmidt:
/// s on [0,1]. Resolution is points per axis, at least 16.
ScanReport scan(Family family, const ClonerSpec& spec, int resolution);

const char* family_name(Family family);
const char* locality_name(Locality locality);
const char* dependence_name(Dependence dependence);

}  // namespace qbroadcast
