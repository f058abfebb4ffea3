// qbroadcast: build two-qubit states, run Buzek-Hillery cloners, classify
// broadcastability, scan parameter grids, reproduce the published tables
// and run the verification suite.

#include "qbroadcast/random.hpp"
#include "qbroadcast/scan_io.hpp"
#include "qbroadcast/tables.hpp"
#include "qbroadcast/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace qbroadcast;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct StateOptions {
  std::string family = "werner";
  double p = 1.0;
  double alpha_sq = 0.5;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double schmidt = 0.5;
};

struct ClonerOptions {
  std::string locality = "local";
  std::string dependence = "si";
  std::optional<double> lambda;
};

void add_state_options(CLI::App* cmd, StateOptions& opts) {
  cmd->add_option("--family", opts.family, "State family: werner|bell|pure")
      ->check(CLI::IsMember({"werner", "bell", "pure"}));
  cmd->add_option("--p", opts.p, "Werner mixing weight p in [0,1]");
  cmd->add_option("--alpha-sq", opts.alpha_sq, "Werner alpha^2 in [0,1]");
  cmd->add_option("--c1", opts.c1, "Bell-diagonal c1");
  cmd->add_option("--c2", opts.c2, "Bell-diagonal c2");
  cmd->add_option("--c3", opts.c3, "Bell-diagonal c3");
  cmd->add_option("--schmidt", opts.schmidt, "Schmidt coefficient s in [0,1]");
}

void add_cloner_options(CLI::App* cmd, ClonerOptions& opts) {
  cmd->add_option("--locality", opts.locality, "Cloner locality: local|nonlocal")
      ->check(CLI::IsMember({"local", "nonlocal"}));
  cmd->add_option("--dependence", opts.dependence, "Machine type: si|sd")
      ->check(CLI::IsMember({"si", "sd"}));
  cmd->add_option("--lambda", opts.lambda,
                  "Machine parameter (state-dependent cloners only)");
}

BlochState build_state(const StateOptions& opts) {
  if (opts.family == "werner") return werner_like({opts.p, opts.alpha_sq});
  if (opts.family == "bell") return bell_diagonal({opts.c1, opts.c2, opts.c3});
  return pure_schmidt(opts.schmidt);
}

ClonerSpec build_spec(const ClonerOptions& opts) {
  const bool local = opts.locality == "local";
  if (opts.dependence == "si") {
    if (opts.lambda)
      throw SpecError("--lambda applies to state-dependent cloners only");
    return local ? ClonerSpec::local_si() : ClonerSpec::nonlocal_si();
  }
  if (!opts.lambda) throw SpecError("state-dependent cloners require --lambda");
  return local ? ClonerSpec::local_sd(*opts.lambda)
               : ClonerSpec::nonlocal_sd(*opts.lambda);
}

Family parse_family(const std::string& name) {
  if (name == "werner") return Family::WernerLike;
  if (name == "bell") return Family::BellDiagonal;
  return Family::PureSchmidt;
}

json bloch_json(const BlochState& s) {
  json t = json::array();
  for (int i = 0; i < 3; ++i)
    t.push_back({s.T(i, 0), s.T(i, 1), s.T(i, 2)});
  return {{"x", {s.x(0), s.x(1), s.x(2)}}, {"y", {s.y(0), s.y(1), s.y(2)}}, {"T", t}};
}

json matrix_json(const MatXc& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json validity_json(const ValidityReport& report) {
  return {{"hermiticity_dev", report.hermiticity_dev},
          {"trace_dev", report.trace_dev},
          {"min_eigenvalue", report.min_eigenvalue},
          {"valid", report.valid}};
}

json verdict_json(const BroadcastVerdict& v) {
  return {{"cross_entangled", v.cross_pairs_entangled},
          {"side_separable", v.side_pairs_separable},
          {"broadcastable", v.broadcastable},
          {"optimal", v.optimally_broadcastable},
          {"discord_cross", v.discord_cross},
          {"discord_side", v.discord_side}};
}

json separability_json(const SeparabilityVerdict& v) {
  return {{"w2", v.w2},
          {"w3", v.w3},
          {"w4", v.w4},
          {"min_pt_eigenvalue", v.min_pt_eigenvalue},
          {"separable", v.separable}};
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output path: " + out_path);
  out << doc.dump(2) << "\n";
}

int cmd_state(const StateOptions& state_opts, const std::string& out_path) {
  const BlochState s = build_state(state_opts);
  const Mat4c rho = from_bloch(s);
  json doc{{"command", "state"},
           {"family", state_opts.family},
           {"bloch", bloch_json(s)},
           {"matrix", matrix_json(rho)},
           {"validity", validity_json(validate(rho))}};
  emit(doc, out_path);
  return kExitOk;
}

int cmd_clone(const StateOptions& state_opts, const ClonerOptions& cloner_opts,
              bool use_oracle, const std::string& out_path) {
  const BlochState s = build_state(state_opts);
  const ClonerSpec spec = build_spec(cloner_opts);
  const CloneOutputs outputs =
      use_oracle ? clone_oracle(s, spec) : clone_closed_form(s, spec);
  json pairs;
  for (const auto& [label, pair_state] : outputs.labeled()) {
    const Mat4c rho = from_bloch(pair_state);
    pairs[std::string(label)] = {{"bloch", bloch_json(pair_state)},
                                 {"separability", separability_json(is_separable(rho))},
                                 {"discord", geometric_discord(pair_state).value}};
  }
  json doc{{"command", "clone"},
           {"locality", locality_name(spec.locality)},
           {"dependence", dependence_name(spec.dependence)},
           {"method", use_oracle ? "oracle" : "closed-form"},
           {"reduces_to_si", spec.reduces_to_si()},
           {"pairs", pairs}};
  if (spec.lambda) doc["lambda"] = *spec.lambda;
  emit(doc, out_path);
  return kExitOk;
}

int cmd_check(const StateOptions& state_opts, const ClonerOptions& cloner_opts,
              const std::string& out_path) {
  const BlochState s = build_state(state_opts);
  const ClonerSpec spec = build_spec(cloner_opts);
  json doc{{"command", "check"},
           {"locality", locality_name(spec.locality)},
           {"dependence", dependence_name(spec.dependence)},
           {"entanglement", verdict_json(classify_entanglement_broadcast(s, spec))},
           {"qcsbe", verdict_json(classify_qcsbe_broadcast(s, spec))}};
  emit(doc, out_path);
  return kExitOk;
}

int cmd_discord(const StateOptions& state_opts, int resolution,
                const std::string& out_path) {
  const BlochState s = build_state(state_opts);
  const DiscordResult closed = geometric_discord(s);
  json doc{{"command", "discord"},
           {"value", closed.value},
           {"lambda_max", closed.lambda_max}};
  if (resolution > 0) {
    const double oracle = discord_oracle(from_bloch(s), resolution);
    doc["oracle"] = oracle;
    doc["oracle_resolution"] = resolution;
    doc["abs_difference"] = std::abs(oracle - closed.value);
  }
  emit(doc, out_path);
  return kExitOk;
}

int cmd_scan(const StateOptions& state_opts, const ClonerOptions& cloner_opts,
             int resolution, const std::string& format, const std::string& out_path,
             unsigned seed) {
  const ScanReport report =
      scan(parse_family(state_opts.family), build_spec(cloner_opts), resolution);
  std::string payload;
  if (format == "csv")
    payload = to_csv(report);
  else
    payload = to_json(report, seed);
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output path: " + out_path);
  out << payload;
  return kExitOk;
}

int cmd_tables(const std::string& out_path) {
  const auto rows = reproduce_all_tables();
  std::size_t failures = 0;
  std::printf("%-8s %-26s %-22s %-16s %-7s %s\n", "table", "row", "computed", "printed",
              "tol", "status");
  for (const auto& row : rows) {
    std::string computed, printed;
    for (std::size_t i = 0; i < row.computed.size(); ++i)
      computed += (i ? ", " : "") + format_number(row.computed[i]);
    for (std::size_t i = 0; i < row.printed.size(); ++i)
      printed += (i ? ", " : "") + format_number(row.printed[i]);
    std::printf("%-8s %-26s %-22s %-16s %-7s %s%s%s\n", row.table.c_str(),
                row.label.c_str(), computed.c_str(), printed.c_str(),
                format_number(row.tolerance).c_str(), row.pass ? "pass" : "FAIL",
                row.note.empty() ? "" : "  # ", row.note.c_str());
    failures += !row.pass;
  }
  if (!out_path.empty() && out_path != "-") {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open output path: " + out_path);
    out << "table,row,computed_lo,computed_hi,printed_lo,printed_hi,tolerance,pass,"
           "note\n";
    for (const auto& row : rows) {
      const bool pair = row.computed.size() == 2;
      out << row.table << ",\"" << row.label << "\"," << format_number(row.computed[0])
          << ',' << (pair ? format_number(row.computed[1]) : "") << ','
          << format_number(row.printed[0]) << ','
          << (row.printed.size() == 2 ? format_number(row.printed[1]) : "") << ','
          << format_number(row.tolerance) << ',' << (row.pass ? 1 : 0) << ",\""
          << row.note << "\"\n";
    }
  }
  std::printf("%zu/%zu rows reproduced\n", rows.size() - failures, rows.size());
  return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(unsigned long long seed, const std::string& checks, bool inject_failure) {
  std::set<std::string> only;
  if (!checks.empty()) {
    std::istringstream stream(checks);
    std::string name;
    const auto known = verification_check_names();
    while (std::getline(stream, name, ',')) {
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw DomainError("unknown check: " + name);
      only.insert(name);
    }
  }
  const auto results = run_verification(seed, only, inject_failure);
  bool failed = false;
  for (const auto& result : results) {
    const char* status = result.informational ? "INFO" : (result.pass ? "PASS" : "FAIL");
    std::printf("[%s] %s: %s\n", status, result.name.c_str(), result.detail.c_str());
    failed |= !result.informational && !result.pass;
  }
  return failed ? kExitVerificationFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Broadcasting of two-qubit entanglement and quantum correlations "
               "via Buzek-Hillery cloning"};
  app.require_subcommand(1);

  StateOptions state_opts;
  ClonerOptions cloner_opts;
  std::string out_path;
  std::string format = "csv";
  int resolution = 64;
  int discord_resolution = 0;
  unsigned long long seed = kDefaultSeed;
  std::string checks;
  bool inject_failure = false;
  bool use_oracle = false;

  CLI::App* state = app.add_subcommand("state", "Build a state and print it");
  add_state_options(state, state_opts);
  state->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* clone = app.add_subcommand("clone", "Clone a state and print all pairs");
  add_state_options(clone, state_opts);
  add_cloner_options(clone, cloner_opts);
  clone->add_flag("--oracle", use_oracle,
                  "Use the full-unitary oracle instead of the closed form");
  clone->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* check = app.add_subcommand("check", "Classify broadcastability");
  add_state_options(check, state_opts);
  add_cloner_options(check, cloner_opts);
  check->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* discord = app.add_subcommand("discord", "Geometric discord of a state");
  add_state_options(discord, state_opts);
  discord->add_option("--resolution", discord_resolution,
                      "Also run the measurement-grid oracle at this resolution");
  discord->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* scan_cmd = app.add_subcommand("scan", "Grid scan over a state family");
  add_state_options(scan_cmd, state_opts);
  add_cloner_options(scan_cmd, cloner_opts);
  scan_cmd->add_option("--resolution", resolution, "Grid points per axis (>= 16)");
  scan_cmd->add_option("--format", format, "Output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--out", out_path, "Output path (default stdout)");
  scan_cmd->add_option("--seed", seed, "Seed recorded in JSON output");

  CLI::App* tables = app.add_subcommand("tables", "Reproduce the published tables");
  tables->add_option("--out", out_path, "Also write rows as CSV to this path");

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--seed", seed, "Seed for the random-state corpora");
  verify->add_option("--checks", checks, "Comma-separated subset of checks");
  verify->add_flag("--inject-failure", inject_failure,
                   "Corrupt a tolerance to exercise the failure path")
      ->group("");  // test hook, hidden from help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state->parsed()) return cmd_state(state_opts, out_path);
    if (clone->parsed()) return cmd_clone(state_opts, cloner_opts, use_oracle, out_path);
    if (check->parsed()) return cmd_check(state_opts, cloner_opts, out_path);
    if (discord->parsed()) return cmd_discord(state_opts, discord_resolution, out_path);
    if (scan_cmd->parsed())
      return cmd_scan(state_opts, cloner_opts, resolution, format, out_path,
                      static_cast<unsigned>(seed));
    if (tables->parsed()) return cmd_tables(out_path);
    if (verify->parsed()) return cmd_verify(seed, checks, inject_failure);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
