// Reproduction of the published broadcasting-range tables from the numeric
// classifier, with pass/fail against the quoted two-decimal values.
#pragma once

#include "qbroadcast/broadcast.hpp"

#include <string>
#include <vector>

namespace qbroadcast {

struct TableRowResult {
  std::string table;   // "I(i)", "I(ii)", "II", "III(i)", "III(ii)", "IV"
  std::string label;   // input parameter description
  std::vector<double> computed;
  std::vector<double> printed;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Werner tables: thresholds in p per alpha^2 and ranges in alpha^2 per p,
/// all from bisection on the numeric classifier, compared at +-0.005
/// (two documented rounding rows use +-0.01).
std::vector<TableRowResult> reproduce_werner_tables();

/// Bell-diagonal tables: 1-D sweeps over c3 at the given step (default
/// 1/256), endpoint agreement within one grid step.
std::vector<TableRowResult> reproduce_bell_tables(double step = 1.0 / 256.0);

std::vector<TableRowResult> reproduce_all_tables();

}  // namespace qbroadcast
