#include "qbroadcast/scan_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace qbroadcast {

namespace {

const char* kVerdictColumns[] = {"cross_entangled", "side_separable", "broadcastable",
                                 "optimal",         "discord_cross",  "discord_side"};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const ScanReport& report, std::ostream& out) {
  for (const auto& name : report.param_names) out << name << ',';
  for (std::size_t i = 0; i < std::size(kVerdictColumns); ++i)
    out << kVerdictColumns[i] << (i + 1 < std::size(kVerdictColumns) ? "," : "\n");
  for (const auto& row : report.rows) {
    for (double p : row.params) out << format_number(p) << ',';
    const BroadcastVerdict& v = row.verdict;
    out << int(v.cross_pairs_entangled) << ',' << int(v.side_pairs_separable) << ','
        << int(v.broadcastable) << ',' << int(v.optimally_broadcastable) << ','
        << format_number(v.discord_cross) << ',' << format_number(v.discord_side)
        << '\n';
  }
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream out;
  write_csv(report, out);
  return out.str();
}

ScanReport from_csv(std::istream& in) {
  ScanReport report;
  std::string line;
  if (!std::getline(in, line)) throw IoError("from_csv: missing header row");
  const auto header = split(line, ',');
  if (header.size() <= std::size(kVerdictColumns))
    throw IoError("from_csv: header lacks parameter columns");
  const std::size_t n_params = header.size() - std::size(kVerdictColumns);
  report.param_names.assign(header.begin(),
                            header.begin() + static_cast<long>(n_params));
  if (report.param_names == std::vector<std::string>{"p", "alpha_sq"})
    report.family = Family::WernerLike;
  else if (report.param_names == std::vector<std::string>{"c1", "c2", "c3"})
    report.family = Family::BellDiagonal;
  else if (report.param_names == std::vector<std::string>{"s"})
    report.family = Family::PureSchmidt;
  else
    throw IoError("from_csv: unrecognized parameter columns");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != header.size()) throw IoError("from_csv: ragged row");
    ScanRow row;
    for (std::size_t i = 0; i < n_params; ++i) row.params.push_back(std::stod(fields[i]));
    BroadcastVerdict& v = row.verdict;
    v.cross_pairs_entangled = fields[n_params] == "1";
    v.side_pairs_separable = fields[n_params + 1] == "1";
    v.broadcastable = fields[n_params + 2] == "1";
    v.optimally_broadcastable = fields[n_params + 3] == "1";
    v.discord_cross = std::stod(fields[n_params + 4]);
    v.discord_side = std::stod(fields[n_params + 5]);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_json(const ScanReport& report, unsigned seed_used) {
  nlohmann::json config{
      {"family", family_name(report.family)},
      {"locality", locality_name(report.spec.locality)},
      {"dependence", dependence_name(report.spec.dependence)},
      {"resolution", report.resolution},
      {"seed", seed_used},
  };
  if (report.spec.lambda)
    config["lambda"] = *report.spec.lambda;
  else
    config["lambda"] = nullptr;

  nlohmann::json grid = nlohmann::json::array();
  std::size_t broadcastable = 0, optimal = 0;
  for (const auto& row : report.rows) {
    nlohmann::json entry;
    for (std::size_t i = 0; i < report.param_names.size(); ++i)
      entry[report.param_names[i]] = row.params[i];
    entry["cross_entangled"] = row.verdict.cross_pairs_entangled;
    entry["side_separable"] = row.verdict.side_pairs_separable;
    entry["broadcastable"] = row.verdict.broadcastable;
    entry["optimal"] = row.verdict.optimally_broadcastable;
    entry["discord_cross"] = row.verdict.discord_cross;
    entry["discord_side"] = row.verdict.discord_side;
    grid.push_back(std::move(entry));
    broadcastable += row.verdict.broadcastable;
    optimal += row.verdict.optimally_broadcastable;
  }

  nlohmann::json summary{
      {"points", report.rows.size()},
      {"broadcastable", broadcastable},
      {"optimally_broadcastable", optimal},
  };
  nlohmann::json doc{{"config", config}, {"grid", grid}, {"summary", summary}};
  return doc.dump(2) + "\n";
}

}  // namespace qbroadcast
