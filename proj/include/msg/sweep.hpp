#ifndef MSG_SWEEP_HPP_
#define MSG_SWEEP_HPP_

// Declarative 1-D / 2-D parameter sweeps and the critical-field scan.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "msg/entanglement.hpp"
#include "msg/errors.hpp"
#include "msg/game.hpp"
#include "msg/spin_model.hpp"

namespace msg {

enum class Parameter { T, B, b, D, Jz };

inline std::string_view parameter_name(Parameter p) {
  switch (p) {
    case Parameter::T: return "T";
    case Parameter::B: return "B";
    case Parameter::b: return "b";
    case Parameter::D: return "D";
    case Parameter::Jz: return "Jz";
  }
  return "?";
}

inline Parameter parse_parameter(std::string_view s) {
  if (s == "T") return Parameter::T;
  if (s == "B") return Parameter::B;
  if (s == "b") return Parameter::b;
  if (s == "D") return Parameter::D;
  if (s == "Jz" || s == "jz") return Parameter::Jz;
  throw DomainError("unknown parameter '" + std::string(s) + "' (expected T, B, b, D or Jz)");
}

inline void set_parameter(ModelParams& p, Parameter which, double value) {
  switch (which) {
    case Parameter::T: p.T = value; break;
    case Parameter::B: p.B = value; break;
    case Parameter::b: p.b = value; break;
    case Parameter::D: p.D = value; break;
    case Parameter::Jz: p.jz = value; break;
  }
}

struct Axis {
  Parameter param = Parameter::B;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;

  /// Point i of an evenly spaced grid; the endpoints are exact.
  double at(int i) const {
    if (i == steps - 1) return to;
    return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

struct SweepOutputs {
  bool pw = true;
  bool cells = false;
  bool logneg2 = false;
  bool logneg4 = false;
};

/// Parses a comma-separated subset of {pw, cells, logneg2, logneg4}.
inline SweepOutputs parse_outputs(std::string_view list) {
  SweepOutputs o{false, false, false, false};
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string_view item = list.substr(start, end - start);
    if (item == "pw") o.pw = true;
    else if (item == "cells") o.cells = true;
    else if (item == "logneg2") o.logneg2 = true;
    else if (item == "logneg4") o.logneg4 = true;
    else throw DomainError("unknown output '" + std::string(item) + "'");
    start = end + 1;
  }
  return o;
}

struct SweepSpec {
  Axis axis1;
  std::optional<Axis> axis2;
  ModelParams fixed;
  SweepOutputs outputs;

  void validate() const {
    auto check = [](const Axis& a) {
      if (!(a.from < a.to)) throw DomainError("sweep axis needs from < to");
      if (a.steps < 2) throw DomainError("sweep axis needs at least 2 steps");
      if (a.param == Parameter::T && !(a.from > 0.0)) throw DomainError("temperature axis must stay above 0");
    };
    check(axis1);
    if (axis2) {
      check(*axis2);
      if (axis2->param == axis1.param) throw DomainError("sweep axes must be distinct parameters");
    }
    if (!(fixed.T > 0.0) && axis1.param != Parameter::T && !(axis2 && axis2->param == Parameter::T))
      throw NonPositiveTemperature(fixed.T);
  }

  std::size_t size() const {
    return static_cast<std::size_t>(axis1.steps) * static_cast<std::size_t>(axis2 ? axis2->steps : 1);
  }

  /// Grid point k in axis1-outer, axis2-inner order.
  ModelParams point(std::size_t k, double* x1, double* x2) const {
    const int inner = axis2 ? axis2->steps : 1;
    ModelParams p = fixed;
    *x1 = axis1.at(static_cast<int>(k / inner));
    set_parameter(p, axis1.param, *x1);
    if (axis2) {
      *x2 = axis2->at(static_cast<int>(k % inner));
      set_parameter(p, axis2->param, *x2);
    }
    return p;
  }
};

struct SweepRow {
  double x1 = 0.0;
  double x2 = 0.0;
  CellResult cells;
  double logneg2 = 0.0;
  double logneg4 = 0.0;
};

inline SweepRow evaluate_point(const ModelParams& p, const SweepOutputs& out) {
  SweepRow row;
  if (out.pw || out.cells || out.logneg4) {
    const DensityMatrix eff = effective_state(p);
    if (out.pw || out.cells) row.cells = win_probability(eff);
    if (out.logneg4) row.logneg4 = log_negativity(eff, Bipartition({1, 2}, 4));
  }
  if (out.logneg2) row.logneg2 = chain_log_negativity(p);
  return row;
}

/// Evaluates every grid point. Work is split over `workers` threads, and rows
/// come back in grid order whatever the completion order.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers = 0) {
  spec.validate();
  const std::size_t n = spec.size();
  std::vector<SweepRow> rows(n);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t k = w; k < n; k += workers) {
        double x1 = 0.0, x2 = 0.0;
        const ModelParams p = spec.point(k, &x1, &x2);
        rows[k] = evaluate_point(p, spec.outputs);
        rows[k].x1 = x1;
        rows[k].x2 = x2;
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return rows;
}

/// Scientific notation, 12 significant digits.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v == 0.0 ? 0.0 : v);
  return buf;
}

inline void write_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  os << parameter_name(spec.axis1.param);
  if (spec.axis2) os << ',' << parameter_name(spec.axis2->param);
  if (spec.outputs.pw) os << ",pw";
  if (spec.outputs.cells)
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) os << ",p" << m << n;
  if (spec.outputs.logneg2) os << ",logneg2";
  if (spec.outputs.logneg4) os << ",logneg4";
  os << '\n';

  for (const SweepRow& r : rows) {
    os << format_number(r.x1);
    if (spec.axis2) os << ',' << format_number(r.x2);
    if (spec.outputs.pw) os << ',' << format_number(r.cells.average);
    if (spec.outputs.cells)
      for (const auto& row : r.cells.probs)
        for (double p : row) os << ',' << format_number(p);
    if (spec.outputs.logneg2) os << ',' << format_number(r.logneg2);
    if (spec.outputs.logneg4) os << ',' << format_number(r.logneg4);
    os << '\n';
  }
}

struct CriticalScanResult {
  double jz = 0.0;
  double critical_B = 0.0;  // midpoint of the steepest successive pair
  double max_jump = 0.0;    // |P_w(B_{i+1}) - P_w(B_i)| there
};

/// Scans P_w over B on an even grid and locates the largest successive jump.
inline CriticalScanResult critical_scan(double jz, double T, double from = 0.0, double to = 3.0, int steps = 301) {
  SweepSpec spec;
  spec.axis1 = {Parameter::B, from, to, steps};
  spec.fixed = {jz, 0.0, 0.0, 0.0, T};
  spec.outputs = {true, false, false, false};
  const std::vector<SweepRow> rows = run_sweep(spec);

  CriticalScanResult out{jz, from, -1.0};
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double jump = std::abs(rows[i + 1].cells.average - rows[i].cells.average);
    if (jump > out.max_jump) {
      out.max_jump = jump;
      out.critical_B = 0.5 * (rows[i].x1 + rows[i + 1].x1);
    }
  }
  return out;
}

}  // namespace msg

#endif  // MSG_SWEEP_HPP_
