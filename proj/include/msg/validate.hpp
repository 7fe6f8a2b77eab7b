#ifndef MSG_VALIDATE_HPP_
#define MSG_VALIDATE_HPP_

// Cross-checks between the closed forms and the numerical pipeline.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "msg/analytic.hpp"
#include "msg/game.hpp"
#include "msg/spin_model.hpp"

namespace msg {

struct ValidationGrid {
  // closed-form density matrix vs exp pipeline
  std::vector<double> jz = {0.0, 0.5, 1.0};
  std::vector<double> fields = {0.0, 0.5, 1.0};  // used for B, b and D
  std::vector<double> temperatures = {0.1, 0.5, 1.0};
  // analytic P_w formulas
  double formula_B_max = 3.0;
  double formula_D_max = 3.0;  // nu runs over [1, sqrt(1 + D_max^2)]
  int formula_steps = 31;
  std::vector<double> formula_temperatures = {0.1, 0.5, 1.0};
  // D <-> b symmetry of P_w
  std::vector<double> symmetry_x = {0.25, 0.5, 0.75, 1.0, 2.0};
  std::vector<double> symmetry_T = {0.05, 0.25, 1.0};
  std::vector<double> symmetry_B = {0.0, 0.5};
  std::vector<double> symmetry_jz = {0.0, 1.0};
  analytic::FormulaOptions formula_options{};
};

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string worst_point;

  bool passed() const { return max_deviation <= tolerance; }
};

namespace detail {

inline std::string describe(const ModelParams& p) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "Jz=%g B=%g b=%g D=%g T=%g", p.jz, p.B, p.b, p.D, p.T);
  return buf;
}

inline void record(CheckResult& c, double dev, const std::string& where) {
  if (dev > c.max_deviation || c.worst_point.empty()) {
    c.max_deviation = std::max(c.max_deviation, dev);
    c.worst_point = where;
  }
}

inline double pipeline_pw(const ModelParams& p) { return win_probability(effective_state(p)).average; }

}  // namespace detail

inline CheckResult check_closed_form(const ValidationGrid& g) {
  CheckResult c{"closed-form rho vs exp(-H/T)", 0.0, 1e-10, {}};
  for (double jz : g.jz)
    for (double B : g.fields)
      for (double b : g.fields)
        for (double D : g.fields)
          for (double T : g.temperatures) {
            const ModelParams p{jz, B, b, D, T};
            const double dev = max_abs_diff(closed_form_state(p).mat(), chain_state(p).mat());
            detail::record(c, dev, detail::describe(p));
          }
  return c;
}

inline CheckResult check_formula_db_zero(const ValidationGrid& g) {
  CheckResult c{"P_w formula (D=b=0) vs pipeline", 0.0, 5e-3, {}};
  for (double T : g.formula_temperatures)
    for (int i = 0; i < g.formula_steps; ++i) {
      const double B = g.formula_B_max * i / (g.formula_steps - 1);
      const ModelParams p{0.0, B, 0.0, 0.0, T};
      const double dev = std::abs(analytic::pw_formula_db_zero(B, T, g.formula_options) - detail::pipeline_pw(p));
      detail::record(c, dev, detail::describe(p));
    }
  return c;
}

inline CheckResult check_formula_b_zero(const ValidationGrid& g) {
  CheckResult c{"P_w formula (B=0) vs pipeline", 0.0, 5e-3, {}};
  for (double T : g.formula_temperatures)
    for (int i = 0; i < g.formula_steps; ++i) {
      const double D = g.formula_D_max * i / (g.formula_steps - 1);
      const ModelParams p{0.0, 0.0, 0.0, D, T};
      const double nu = analytic::nu_of(0.0, D);
      const double dev = std::abs(analytic::pw_formula_b_zero(nu, T, g.formula_options) - detail::pipeline_pw(p));
      detail::record(c, dev, detail::describe(p) + " nu=" + std::to_string(nu));
    }
  return c;
}

inline CheckResult check_d_b_symmetry(const ValidationGrid& g) {
  CheckResult c{"P_w(D=x,b=0) vs P_w(D=0,b=x)", 0.0, 1e-10, {}};
  for (double x : g.symmetry_x)
    for (double T : g.symmetry_T)
      for (double B : g.symmetry_B)
        for (double jz : g.symmetry_jz) {
          const ModelParams pd{jz, B, 0.0, x, T};
          const ModelParams pb{jz, B, x, 0.0, T};
          detail::record(c, std::abs(detail::pipeline_pw(pd) - detail::pipeline_pw(pb)), detail::describe(pd));
        }
  return c;
}

inline std::vector<CheckResult> run_validation(const ValidationGrid& g) {
  return {check_closed_form(g), check_formula_db_zero(g), check_formula_b_zero(g), check_d_b_symmetry(g)};
}

inline void print_report(std::ostream& os, const std::vector<CheckResult>& checks) {
  char line[256];
  std::snprintf(line, sizeof line, "%-36s %-14s %-10s %-6s %s\n", "check", "max_dev", "tol", "status", "worst point");
  os << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-36s %-14.6e %-10.1e %-6s %s\n", c.name.c_str(), c.max_deviation, c.tolerance,
                  c.passed() ? "PASS" : "FAIL", c.worst_point.c_str());
    os << line;
  }
}

}  // namespace msg

#endif  // MSG_VALIDATE_HPP_
