// Command-line front end: single-point evaluation, parameter sweeps, and the
// oracle-backed validate suite.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opabs/detection.hpp"
#include "opabs/oracle.hpp"
#include "opabs/photon_number.hpp"
#include "opabs/qfi_ideal.hpp"
#include "opabs/qfi_lossy.hpp"
#include "opabs/sweep.hpp"
#include "opabs/validate.hpp"

namespace {

using opabs::Params;

struct CommonFlags {
  std::string scheme;
  std::optional<double> alpha, beta, g, theta, phi, tau, T, eta;
  std::optional<int> m, v;
  std::string config_path;
  int cutoff = opabs::kDefaultCutoff;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--scheme", f.scheme, "A (coherent in mode a) or B (mode b)")
      ->check(CLI::IsMember({"A", "B"}));
  cmd->add_option("--alpha", f.alpha, "coherent amplitude, mode a");
  cmd->add_option("--beta", f.beta, "coherent amplitude, mode b");
  cmd->add_option("--g", f.g, "amplifier gain (default 1)");
  cmd->add_option("--theta", f.theta, "amplifier phase (default pi)");
  cmd->add_option("--phi", f.phi, "probe phase (default pi/2)");
  cmd->add_option("--tau", f.tau, "beam-splitter transmittance (default 0.5)");
  cmd->add_option("--T", f.T, "detection-path transmittance (default 1)");
  cmd->add_option("--eta", f.eta, "phase-path transmittance (default 1)");
  cmd->add_option("--m", f.m, "photons subtracted (default 0)");
  cmd->add_option("--v", f.v, "repeated measurements (default 1)");
  cmd->add_option("--cutoff", f.cutoff, "oracle Fock cutoff (default 40)");
  cmd->add_option("--config", f.config_path,
                  "JSON file with the same keys as the flags; flags win");
}

// defaults <- config file <- scheme preset <- explicit flags
Params resolve_params(const CLI::App* cmd, const CommonFlags& f) {
  Params p;
  std::string scheme = f.scheme;
  std::optional<double> alpha = f.alpha, beta = f.beta;
  auto seen = [&](const char* name) { return cmd->count(name) > 0; };

  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw opabs::UsageError("config: cannot open " + f.config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw opabs::UsageError(std::string("config: parse error: ") + e.what());
    }
    auto num = [&](const char* key, auto setter) {
      if (j.contains(key)) setter(j.at(key).get<double>());
    };
    if (j.contains("scheme") && !seen("--scheme"))
      scheme = j.at("scheme").get<std::string>();
    num("g", [&](double x) { p.g = x; });
    num("theta", [&](double x) { p.theta = x; });
    num("phi", [&](double x) { p.phi = x; });
    num("tau", [&](double x) { p.tau = x; });
    num("T", [&](double x) { p.T = x; });
    num("eta", [&](double x) { p.eta = x; });
    if (j.contains("m")) p.m = j.at("m").get<int>();
    if (j.contains("v")) p.v = j.at("v").get<int>();
    if (j.contains("alpha") && !alpha) alpha = j.at("alpha").get<double>();
    if (j.contains("beta") && !beta) beta = j.at("beta").get<double>();
  }

  if (scheme == "A") {
    p.alpha = 1.0;
    p.beta = 0.0;
  } else if (scheme == "B") {
    p.alpha = 0.0;
    p.beta = 1.0;
  }
  if (alpha) p.alpha = *alpha;
  if (beta) p.beta = *beta;
  if (f.g && seen("--g")) p.g = *f.g;
  if (f.theta && seen("--theta")) p.theta = *f.theta;
  if (f.phi && seen("--phi")) p.phi = *f.phi;
  if (f.tau && seen("--tau")) p.tau = *f.tau;
  if (f.T && seen("--T")) p.T = *f.T;
  if (f.eta && seen("--eta")) p.eta = *f.eta;
  if (f.m && seen("--m")) p.m = *f.m;
  if (f.v && seen("--v")) p.v = *f.v;
  p.validate();
  return p;
}

void print_value(const std::string& key, double value) {
  std::cout << key << " = " << opabs::format_number(value) << "\n";
}

int run_single(const std::string& what, const Params& p) {
  try {
    if (what == "sensitivity") {
      const auto r = opabs::homodyne_stats(p);
      print_value("delta_phi", r.delta_phi);
      print_value("mean_X", r.mean_X);
      print_value("dmean_dphi", r.dmean_dphi);
      print_value("var_X", r.var_X);
    } else if (what == "qfi") {
      const auto r = opabs::qfi_ideal(p);
      print_value("F", r.F);
      print_value("qcrb", r.qcrb);
    } else if (what == "qfi-lossy") {
      const auto r = opabs::qfi_lossy_detail(p);
      print_value("F_lossy", r.F_L);
      if (r.F_L > 0.0) print_value("qcrb_lossy", opabs::qcrb(r.F_L, p.v));
      print_value("lambda_star", r.lambda_star);
    } else if (what == "nphoton") {
      const auto r = opabs::internal_photon_number(p);
      print_value("n_total", r.n_total);
      print_value("sql", r.sql);
      print_value("hl", r.hl);
    }
  } catch (const opabs::AnnihilatedStateError&) {
    std::cout << "status = annihilated\n";
  }
  return 0;
}

opabs::SweepAxis parse_axis(const std::string& text) {
  // name=start:stop:count
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw opabs::UsageError("axis: expected name=start:stop:count");
  opabs::SweepAxis a;
  a.name = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  for (auto& ch : rest)
    if (ch == ':') ch = ' ';
  std::istringstream is(rest);
  if (!(is >> a.start >> a.stop >> a.count))
    throw opabs::UsageError("axis: expected name=start:stop:count");
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "opabs - phase sensitivity, quantum Fisher information and photon "
      "statistics of a photon-subtracted amplifier/beam-splitter "
      "interferometer"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string output_path, format = "csv";
  std::vector<std::string> axis_specs;
  std::string quantities_csv;
  std::string level = "quick";
  std::string report_path;
  bool inject_x4 = false;

  CLI::App* c_sens = app.add_subcommand("sensitivity", "homodyne phase sensitivity");
  CLI::App* c_qfi = app.add_subcommand("qfi", "ideal quantum Fisher information");
  CLI::App* c_qfl = app.add_subcommand("qfi-lossy", "photon-loss Fisher bound");
  CLI::App* c_nph = app.add_subcommand("nphoton", "internal photon number, SQL, HL");
  CLI::App* c_sweep = app.add_subcommand("sweep", "grid sweep to CSV/JSON");
  CLI::App* c_val = app.add_subcommand("validate", "oracle-equivalence suite");
  for (CLI::App* c : {c_sens, c_qfi, c_qfl, c_nph, c_sweep, c_val})
    add_common_flags(c, flags);

  c_sweep->add_option("--axis", axis_specs,
                      "axis as name=start:stop:count (1 or 2)")
      ->expected(1, 2)
      ->required();
  c_sweep->add_option("--quantities", quantities_csv,
                      "comma-separated subset of delta_phi,F,qcrb,F_lossy,"
                      "qcrb_lossy,n_total,sql,hl (default: all)");
  c_sweep->add_option("--output", output_path, "output file (default stdout)");
  c_sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  c_val->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  c_val->add_option("--report", report_path, "write the JSON report here");
  c_val->add_flag("--inject-x4-fault", inject_x4)->group("");  // test fixture

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_sweep->parsed()) {
      opabs::SweepSpec spec;
      spec.fixed = resolve_params(c_sweep, flags);
      for (const auto& s : axis_specs) {
        const auto axis = parse_axis(s);
        Params probe = spec.fixed;  // rejects unknown axis names early
        opabs::set_param_field(probe, axis.name, axis.start);
        if (c_sweep->count("--" + axis.name) > 0)
          throw opabs::UsageError("axis " + axis.name +
                                  " also given as a fixed flag");
        spec.axes.push_back(axis);
      }
      if (!quantities_csv.empty()) {
        spec.quantities.clear();
        std::istringstream is(quantities_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) {
          const auto q = opabs::quantity_from_name(tok);
          if (!q) throw opabs::UsageError("unknown quantity: " + tok);
          spec.quantities.push_back(*q);
        }
      }
      spec.output_path = output_path;
      spec.format = format == "json" ? opabs::SweepSpec::Format::json
                                     : opabs::SweepSpec::Format::csv;
      const auto rows = opabs::run_sweep(spec);
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!spec.output_path.empty()) {
        file.open(spec.output_path, std::ios::binary);
        if (!file)
          throw opabs::UsageError("cannot write " + spec.output_path);
        os = &file;
      }
      if (spec.format == opabs::SweepSpec::Format::csv)
        opabs::write_csv(*os, spec, rows);
      else
        opabs::write_json(*os, spec, rows);
      return 0;
    }

    if (c_val->parsed()) {
      opabs::ValidateOptions opts;
      opts.level = level == "full" ? opabs::ValidateLevel::full
                                   : opabs::ValidateLevel::quick;
      opts.cutoff = flags.cutoff;
      opts.inject_detection_x4_fault = inject_x4;
      const auto report = opabs::run_validation(opts);
      for (const auto& c : report.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
      if (!report_path.empty()) {
        std::ofstream rf(report_path, std::ios::binary);
        if (!rf) throw opabs::UsageError("cannot write " + report_path);
        opabs::write_report(rf, report, opts);
      } else {
        opabs::write_report(std::cout, report, opts);
      }
      return report.all_passed() ? 0 : 2;
    }

    const Params p = resolve_params(
        c_sens->parsed() ? c_sens
        : c_qfi->parsed() ? c_qfi
        : c_qfl->parsed() ? c_qfl
                          : c_nph,
        flags);
    const std::string what = c_sens->parsed() ? "sensitivity"
                             : c_qfi->parsed() ? "qfi"
                             : c_qfl->parsed() ? "qfi-lossy"
                                               : "nphoton";
    return run_single(what, p);
  } catch (const opabs::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
