// CSV and JSON serialization of scan reports. CSV numbers are fixed at 12
// significant digits so golden files are stable; LF line endings, header
// row mandatory.
#pragma once

#include "qbroadcast/broadcast.hpp"

#include <iosfwd>
#include <string>

namespace qbroadcast {

/// One double at 12 significant digits, shortest form.
std::string format_number(double v);

void write_csv(const ScanReport& report, std::ostream& out);
std::string to_csv(const ScanReport& report);

/// Parses a scan CSV back into a report. The family is inferred from the
/// header's parameter columns; cloner spec and resolution are not part of
/// the CSV payload.
ScanReport from_csv(std::istream& in);

/// JSON with top-level keys config, grid, summary.
std::string to_json(const ScanReport& report, unsigned seed_used);

}  // namespace qbroadcast
