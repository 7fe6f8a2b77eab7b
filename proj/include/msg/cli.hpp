#ifndef MSG_CLI_HPP_
#define MSG_CLI_HPP_

// Command-line front end: pw, sweep, critical, validate, classical.
//
// Exit codes: 0 success, 1 validation failure, 2 invalid arguments,
// 3 unwritable output destination.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msg/analytic.hpp"
#include "msg/game.hpp"
#include "msg/spin_model.hpp"
#include "msg/sweep.hpp"
#include "msg/validate.hpp"

namespace msg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnwritable = 3;

/// T = 0 has no Gibbs state; requests for it are mapped here.
inline constexpr double kZeroTemperatureSubstitute = 1e-3;

namespace detail {

inline void add_model_flags(CLI::App* cmd, ModelParams& p, bool with_temperature = true) {
  cmd->add_option("--jz", p.jz, "ZZ coupling J_z (>= 0)")->capture_default_str();
  cmd->add_option("--B", p.B, "homogeneous field B")->capture_default_str();
  cmd->add_option("--b", p.b, "inhomogeneous field b")->capture_default_str();
  cmd->add_option("--D", p.D, "DM interaction strength D (z direction)")->capture_default_str();
  if (with_temperature) cmd->add_option("--T", p.T, "temperature (k = 1)")->capture_default_str();
}

/// Negative T and J_z are rejected; T = 0 is replaced with a warning.
inline void normalize_params(ModelParams& p, std::ostream& err) {
  if (p.jz < 0.0) throw DomainError("--jz must be >= 0");
  if (p.T < 0.0) throw NonPositiveTemperature(p.T);
  if (p.T == 0.0) {
    err << "warning: T = 0 is not representable; using T = " << kZeroTemperatureSubstitute << '\n';
    p.T = kZeroTemperatureSubstitute;
  }
}

inline std::string fixed12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void print_cells(std::ostream& out, const CellResult& r) {
  out << "cells P(m,n) (rows m = Alice's row, columns n = Bob's column):\n";
  for (int m = 0; m < 3; ++m) {
    out << "  m=" << m + 1 << ':';
    for (int n = 0; n < 3; ++n) out << "  " << fixed12(r.probs[m][n]);
    out << '\n';
  }
}

inline void print_witness(std::ostream& out, const ClassicalStrategy& s) {
  out << "Alice's rows (even parity):\n";
  for (int m = 1; m <= 3; ++m) {
    out << "  row " << m << ':';
    for (int n = 1; n <= 3; ++n) out << ' ' << s.alice_entry(m, n);
    out << '\n';
  }
  out << "Bob's columns (odd parity), laid out as a square:\n";
  for (int m = 1; m <= 3; ++m) {
    out << "  row " << m << ':';
    for (int n = 1; n <= 3; ++n) out << ' ' << s.bob_entry(m, n);
    out << '\n';
  }
}

}  // namespace detail

inline int cmd_pw(ModelParams p, std::ostream& out, std::ostream& err) {
  detail::normalize_params(p, err);
  const CellResult r = win_probability(effective_state(p));
  out << "P_w = " << detail::fixed12(r.average) << '\n';
  detail::print_cells(out, r);
  return kExitOk;
}

inline int cmd_sweep(SweepSpec spec, const std::string& destination, unsigned workers, std::ostream& out,
                     std::ostream& err) {
  detail::normalize_params(spec.fixed, err);
  spec.validate();
  const std::vector<SweepRow> rows = run_sweep(spec, workers);
  if (destination.empty() || destination == "-") {
    write_csv(out, spec, rows);
    return kExitOk;
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << destination << "'\n";
    return kExitUnwritable;
  }
  write_csv(file, spec, rows);
  file.flush();
  if (!file) {
    err << "error: failed writing '" << destination << "'\n";
    return kExitUnwritable;
  }
  return kExitOk;
}

inline int cmd_critical(double jz, double T, double from, double to, int steps, std::ostream& out, std::ostream& err) {
  ModelParams p{jz, 0.0, 0.0, 0.0, T};
  detail::normalize_params(p, err);
  if (!(from < to) || steps < 2) throw DomainError("critical scan needs from < to and steps >= 2");
  const CriticalScanResult r = critical_scan(p.jz, p.T, from, to, steps);
  out << "Jz = " << detail::fixed12(r.jz) << '\n'
      << "critical_B = " << detail::fixed12(r.critical_B) << '\n'
      << "max_jump = " << detail::fixed12(r.max_jump) << '\n';
  return kExitOk;
}

inline int cmd_validate(const ValidationGrid& grid, std::ostream& out) {
  const std::vector<CheckResult> checks = run_validation(grid);
  print_report(out, checks);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed();

  const CheckResult& b_zero = checks[2];
  if (!b_zero.passed() && grid.formula_options.nu_prefactor == analytic::NuPrefactor::printed) {
    ValidationGrid alt = grid;
    alt.formula_options.nu_prefactor = analytic::NuPrefactor::cubic;
    const CheckResult cubic = check_formula_b_zero(alt);
    out << "note: the B=0 formula with a nu^3 prefactor instead of nu^(3/2) deviates by "
        << detail::fixed12(cubic.max_deviation) << " (" << (cubic.passed() ? "within" : "outside")
        << " tolerance)\n";
  }
  out << (ok ? "all checks passed\n" : "validation FAILED\n");
  return ok ? kExitOk : kExitValidationFailed;
}

inline int cmd_classical(std::ostream& out) {
  const ClassicalResult r = classical_optimum();
  out << "classical optimum = " << r.value.str() << " (" << r.best_wins << " of 9 cells, " << r.strategies_examined
      << " deterministic strategy pairs)\n";
  detail::print_witness(out, r.witness);
  return kExitOk;
}

/// Parses argv and dispatches. Writes results to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magic square game with thermal XXZ spin-chain resources"};
  app.require_subcommand(1);

  ModelParams pw_params{0.0, 0.0, 0.0, 0.0, 0.01};
  auto* pw = app.add_subcommand("pw", "winning probability at one parameter point");
  detail::add_model_flags(pw, pw_params);

  SweepSpec spec;
  spec.fixed = {0.0, 0.0, 0.0, 0.0, 0.01};
  std::string axis1_name, axis2_name, outputs = "pw", destination = "-";
  Axis axis2{Parameter::T, 0.0, 1.0, 2};
  unsigned workers = 0;
  auto* sweep = app.add_subcommand("sweep", "1-D or 2-D parameter sweep written as CSV");
  detail::add_model_flags(sweep, spec.fixed);
  sweep->add_option("--param", axis1_name, "swept parameter: T, B, b, D or Jz")->required();
  sweep->add_option("--from", spec.axis1.from, "axis start")->required();
  sweep->add_option("--to", spec.axis1.to, "axis end")->required();
  sweep->add_option("--steps", spec.axis1.steps, "grid points, endpoints included")->required();
  auto* p2 = sweep->add_option("--param2", axis2_name, "second (inner) swept parameter");
  sweep->add_option("--from2", axis2.from)->needs(p2);
  sweep->add_option("--to2", axis2.to)->needs(p2);
  sweep->add_option("--steps2", axis2.steps)->needs(p2);
  sweep->add_option("--outputs", outputs, "comma list of pw, cells, logneg2, logneg4")->capture_default_str();
  sweep->add_option("--out", destination, "output file, '-' for stdout")->capture_default_str();
  sweep->add_option("--workers", workers, "worker threads (0 = hardware concurrency)");

  double crit_jz = 0.0, crit_T = 0.01, crit_from = 0.0, crit_to = 3.0;
  int crit_steps = 301;
  auto* critical = app.add_subcommand("critical", "locate the sudden change of P_w in B");
  critical->add_option("--jz", crit_jz)->capture_default_str();
  critical->add_option("--T", crit_T)->capture_default_str();
  critical->add_option("--from", crit_from)->capture_default_str();
  critical->add_option("--to", crit_to)->capture_default_str();
  critical->add_option("--steps", crit_steps)->capture_default_str();

  ValidationGrid grid;
  std::string coefficients = "printed", nu_power = "printed";
  auto* validate = app.add_subcommand("validate", "closed forms vs the numerical pipeline");
  validate->add_option("--coefficients", coefficients, "printed | rational")
      ->check(CLI::IsMember({"printed", "rational"}))
      ->capture_default_str();
  validate->add_option("--nu-power", nu_power, "prefactor of the B=0 formula: printed (nu^1.5) | cubic (nu^3)")
      ->check(CLI::IsMember({"printed", "cubic"}))
      ->capture_default_str();
  validate->add_option("--formula-steps", grid.formula_steps, "grid points per formula sweep")->capture_default_str();

  auto* classical = app.add_subcommand("classical", "exhaustive classical optimum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (pw->parsed()) return cmd_pw(pw_params, out, err);
    if (sweep->parsed()) {
      spec.axis1.param = parse_parameter(axis1_name);
      if (!axis2_name.empty()) {
        axis2.param = parse_parameter(axis2_name);
        spec.axis2 = axis2;
      }
      spec.outputs = parse_outputs(outputs);
      return cmd_sweep(spec, destination, workers, out, err);
    }
    if (critical->parsed()) return cmd_critical(crit_jz, crit_T, crit_from, crit_to, crit_steps, out, err);
    if (validate->parsed()) {
      if (grid.formula_steps < 2) throw DomainError("--formula-steps must be >= 2");
      grid.formula_options.coefficients =
          coefficients == "rational" ? analytic::Coefficients::rational : analytic::Coefficients::printed;
      grid.formula_options.nu_prefactor =
          nu_power == "cubic" ? analytic::NuPrefactor::cubic : analytic::NuPrefactor::printed;
      return cmd_validate(grid, out);
    }
    if (classical->parsed()) return cmd_classical(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace msg::cli

#endif  // MSG_CLI_HPP_
