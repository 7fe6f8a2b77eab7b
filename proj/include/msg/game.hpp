#ifndef MSG_GAME_HPP_
#define MSG_GAME_HPP_

// Mermin-Peres magic square game.
//
// Alice (qubits 1, 2) gets row m and must output a row of even parity; Bob
// (qubits 3, 4) gets column n and must output a column of odd parity. They win
// when the shared cell agrees. After applying A_m x B_n each measures two bits
// in the computational basis: Alice's (a1, a2) are her row's entries in
// columns 1 and 2, Bob's (b1, b2) his column's entries in rows 1 and 2, and
// the third entry of each is fixed by parity.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "msg/errors.hpp"
#include "msg/linalg.hpp"
#include "msg/spin_model.hpp"

namespace msg {

struct StrategySet {
  std::array<ComplexMatrix, 3> a;  // Alice, indexed by row m - 1
  std::array<ComplexMatrix, 3> b;  // Bob, indexed by column n - 1
};

/// Pure state (|0011> + |1100> - |0110> - |1001>) / 2 as a projector.
inline DensityMatrix ideal_state() {
  ComplexMatrix rho(16);
  const std::array<std::size_t, 4> idx = {3, 12, 6, 9};
  const std::array<double, 4> amp = {0.5, 0.5, -0.5, -0.5};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho(idx[i], idx[j]) = amp[i] * amp[j];
  return {rho, 4};
}

inline StrategySet strategy_operators() {
  const Complex i(0.0, 1.0);
  const Complex r2 = 1.0 / std::sqrt(2.0);
  const Complex h = 0.5;
  StrategySet s;
  s.a[0] = ComplexMatrix{{i, 0, 0, 1}, {0, -i, 1, 0}, {0, i, 1, 0}, {1, 0, 0, i}} * r2;
  s.a[1] = ComplexMatrix{{i, 1, 1, i}, {-i, 1, -1, i}, {i, 1, -1, -i}, {-i, 1, 1, -i}} * h;
  s.a[2] = ComplexMatrix{{-1, -1, -1, 1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, -1, -1, -1}} * h;
  // Entry (1,0) is -i. Some printed versions show -1 there, which is not unitary.
  s.b[0] = ComplexMatrix{{i, -i, 1, 1}, {-i, -i, 1, -1}, {1, 1, -i, i}, {-i, i, 1, 1}} * h;
  s.b[1] = ComplexMatrix{{-1, i, 1, i}, {1, i, 1, -i}, {1, -i, 1, i}, {-1, -i, 1, -i}} * h;
  s.b[2] = ComplexMatrix{{1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, -1, 0}} * r2;
  return s;
}

namespace detail {

inline void require_cell(int m, int n) {
  if (m < 1 || m > 3 || n < 1 || n > 3)
    throw DomainError("cell (" + std::to_string(m) + ", " + std::to_string(n) + ") outside 1..3");
}

/// Entry j (1-based) of a row of even parity whose first two entries are a1, a2.
inline int row_entry(int a1, int a2, int j) { return j == 1 ? a1 : j == 2 ? a2 : (a1 ^ a2); }

/// Entry i (1-based) of a column of odd parity whose first two entries are b1, b2.
inline int column_entry(int b1, int b2, int i) { return i == 1 ? b1 : i == 2 ? b2 : (1 ^ b1 ^ b2); }

inline bool cell_wins(std::size_t basis_index, int m, int n) {
  const int a1 = (basis_index >> 3) & 1, a2 = (basis_index >> 2) & 1;
  const int b1 = (basis_index >> 1) & 1, b2 = basis_index & 1;
  return row_entry(a1, a2, n) == column_entry(b1, b2, m);
}

}  // namespace detail

/// Diagonal 0/1 projector onto the measurement outcomes that win cell (m, n).
inline ComplexMatrix success_projector(int m, int n) {
  detail::require_cell(m, n);
  ComplexMatrix p(16);
  for (std::size_t k = 0; k < 16; ++k)
    if (detail::cell_wins(k, m, n)) p(k, k) = 1.0;
  return p;
}

inline constexpr double kProbabilityTolerance = 1e-12;

inline double cell_win_probability(const DensityMatrix& rho, const StrategySet& ops, int m, int n) {
  detail::require_cell(m, n);
  if (rho.qubits() != 4) throw DimensionMismatch("game state must have 4 qubits");
  const ComplexMatrix u = kron(ops.a[m - 1], ops.b[n - 1]);
  const ComplexMatrix& r = rho.mat();

  // Only the diagonal of U rho U^H is needed against a diagonal projector.
  const ComplexMatrix ur = u * r;
  Complex total = 0.0;
  for (std::size_t k = 0; k < 16; ++k) {
    if (!detail::cell_wins(k, m, n)) continue;
    for (std::size_t j = 0; j < 16; ++j) total += ur(k, j) * std::conj(u(k, j));
  }
  if (std::abs(total.imag()) > kProbabilityTolerance)
    throw Error("win probability has imaginary part " + std::to_string(total.imag()));
  const double p = total.real();
  if (p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance)
    throw Error("win probability " + std::to_string(p) + " outside [0, 1]");
  return std::clamp(p, 0.0, 1.0);
}

inline double cell_win_probability(const DensityMatrix& rho, int m, int n) {
  return cell_win_probability(rho, strategy_operators(), m, n);
}

struct CellResult {
  std::array<std::array<double, 3>, 3> probs{};  // probs[m-1][n-1]
  double average = 0.0;
};

/// Per-cell probabilities and their uniform average, summed m-major.
inline CellResult win_probability(const DensityMatrix& rho) {
  const StrategySet ops = strategy_operators();
  CellResult out;
  double sum = 0.0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      out.probs[m - 1][n - 1] = cell_win_probability(rho, ops, m, n);
      sum += out.probs[m - 1][n - 1];
    }
  out.average = sum / 9.0;
  return out;
}

/// Deterministic classical strategy. Row m's column-3 entry and column n's
/// row-3 entry are implied by parity.
struct ClassicalStrategy {
  std::array<std::array<int, 2>, 3> rows{};  // rows[m-1] = entries at columns 1, 2
  std::array<std::array<int, 2>, 3> cols{};  // cols[n-1] = entries at rows 1, 2

  int alice_entry(int m, int n) const { return detail::row_entry(rows[m - 1][0], rows[m - 1][1], n); }
  int bob_entry(int m, int n) const { return detail::column_entry(cols[n - 1][0], cols[n - 1][1], m); }

  int wins() const {
    int w = 0;
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) w += alice_entry(m, n) == bob_entry(m, n);
    return w;
  }

  /// Decodes a 6-bit row code and 6-bit column code (two bits per row/column).
  static ClassicalStrategy from_codes(unsigned row_code, unsigned col_code) {
    ClassicalStrategy s;
    for (int k = 0; k < 3; ++k) {
      s.rows[k] = {static_cast<int>((row_code >> (2 * k + 1)) & 1U), static_cast<int>((row_code >> (2 * k)) & 1U)};
      s.cols[k] = {static_cast<int>((col_code >> (2 * k + 1)) & 1U), static_cast<int>((col_code >> (2 * k)) & 1U)};
    }
    return s;
  }
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ClassicalResult {
  Rational value;                // best winning fraction, reduced
  int best_wins = 0;             // out of 9
  ClassicalStrategy witness;     // first strategy reaching best_wins
  int strategies_examined = 0;   // 4096
};

/// Exhaustive search over all 4^3 x 4^3 deterministic strategy pairs. Shared
/// randomness is a convex mixture of these, so this is the classical value.
inline ClassicalResult classical_optimum() {
  ClassicalResult best;
  for (unsigned rc = 0; rc < 64; ++rc)
    for (unsigned cc = 0; cc < 64; ++cc) {
      const ClassicalStrategy s = ClassicalStrategy::from_codes(rc, cc);
      const int w = s.wins();
      ++best.strategies_examined;
      if (w > best.best_wins) {
        best.best_wins = w;
        best.witness = s;
      }
    }
  const std::int64_t g = std::gcd<std::int64_t, std::int64_t>(best.best_wins, 9);
  best.value = {best.best_wins / g, 9 / g};
  return best;
}

}  // namespace msg

#endif  // MSG_GAME_HPP_
