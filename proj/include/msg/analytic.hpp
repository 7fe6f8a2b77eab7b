#ifndef MSG_ANALYTIC_HPP_
#define MSG_ANALYTIC_HPP_

// Closed-form winning probabilities for the XX chain (Jz = 0) in two
// sub-domains: D = b = 0 (free B, T) and B = 0 (free nu, T).
//
// The default coefficients are four-decimal values. Coefficients::rational
// swaps in the simple fractions they truncate (0.0694 -> 5/72, 0.0555 -> 1/18,
// ...), which reproduce the numerical pipeline to rounding error.
//
// The default B = 0 expression divides by nu^{3/2}. Numerically the
// prefactor that matches the pipeline is nu^3; NuPrefactor::cubic selects it.
// NuPrefactor::printed keeps the nu^{3/2} form.

#include <algorithm>
#include <cmath>
#include <string>

#include "msg/errors.hpp"

namespace msg::analytic {

enum class Coefficients { printed, rational };
enum class NuPrefactor { printed, cubic };

struct FormulaOptions {
  Coefficients coefficients = Coefficients::printed;
  NuPrefactor nu_prefactor = NuPrefactor::printed;
};

enum class FormulaDomain { db_zero, b_zero };

namespace detail {

struct DbZeroCoefficients {
  double c4b, c3b_cosh1, c3b_sinh1, c2b_sinh2, c2b_cosh2, c2b_const;
  double c1b_sinh1, c1b_sinh3, c1b_cosh1, c1b_cosh3;
  double sinh4, cosh2, cosh4, constant;
};

inline DbZeroCoefficients db_zero_coefficients(Coefficients which) {
  if (which == Coefficients::printed)
    return {0.0694, 0.5, -0.0555, -0.0555, 0.7777, 0.9444, -0.1111, 0.0555,
            2.8888, 0.6111, 0.0277, 1.0555, 0.0972, 1.05556};
  return {5.0 / 72, 0.5, -1.0 / 18, -1.0 / 18, 7.0 / 9, 17.0 / 18, -1.0 / 9, 1.0 / 18,
          26.0 / 9, 11.0 / 18, 1.0 / 36, 19.0 / 18, 7.0 / 72, 19.0 / 18};
}

struct BZeroCoefficients {
  double sinh1, sinh3, cosh3_a, cosh3_c, cosh1_a, cosh1_c, cosh2_a, cosh2_c, const_a, const_c;
};

inline BZeroCoefficients b_zero_coefficients(Coefficients which) {
  if (which == Coefficients::printed)
    return {-0.0833, 0.0277, 0.0694, 0.0278, 0.9305, -0.0278, 0.3611, 0.0555, 0.6388, -0.055};
  return {-1.0 / 12, 1.0 / 36, 5.0 / 72, 1.0 / 36, 67.0 / 72, -1.0 / 36, 13.0 / 36, 1.0 / 18, 23.0 / 36, -1.0 / 18};
}

}  // namespace detail

/// P_w for Jz = D = b = 0 as a function of the homogeneous field and T.
inline double pw_formula_db_zero(double B, double T, FormulaOptions opt = {}) {
  if (!(T > 0.0)) throw NonPositiveTemperature(T);
  const auto k = detail::db_zero_coefficients(opt.coefficients);
  const double x = std::abs(B) / T, y = 1.0 / T;
  // Numerator and denominator are degree 4 in exponentials of x and y; both
  // are scaled by e^{-4m} so low temperatures do not overflow.
  const double m = std::max(x, y);
  auto ch = [m](double a, int n) { return 0.5 * (std::exp(n * (a - m)) + std::exp(-n * (a + m))); };
  auto sh = [m](double a, int n) { return 0.5 * (std::exp(n * (a - m)) - std::exp(-n * (a + m))); };
  auto e = [m](int n) { return std::exp(-n * m); };

  const double numer = k.c4b * ch(x, 4)
                     + ch(x, 3) * (k.c3b_cosh1 * ch(y, 1) + k.c3b_sinh1 * sh(y, 1))
                     + ch(x, 2) * (k.c2b_sinh2 * sh(y, 2) + k.c2b_cosh2 * ch(y, 2) + k.c2b_const * e(2))
                     + ch(x, 1) * (k.c1b_sinh1 * sh(y, 1) * e(2) + k.c1b_sinh3 * sh(y, 3)
                                   + k.c1b_cosh1 * ch(y, 1) * e(2) + k.c1b_cosh3 * ch(y, 3))
                     + k.sinh4 * sh(y, 4) + k.cosh2 * ch(y, 2) * e(2) + k.cosh4 * ch(y, 4) + k.constant * e(4);
  const double value = numer / std::pow(ch(y, 1) + ch(x, 1), 4);
  if (!std::isfinite(value)) throw DomainError("D=b=0 formula overflows at B=" + std::to_string(B) + ", T=" + std::to_string(T));
  return value;
}

/// P_w for Jz = B = 0 as a function of nu = sqrt(1 + b^2 + D^2) and T.
inline double pw_formula_b_zero(double nu, double T, FormulaOptions opt = {}) {
  if (!(T > 0.0)) throw NonPositiveTemperature(T);
  if (!(nu >= 1.0)) throw DomainError("nu = " + std::to_string(nu) + " < 1");
  const auto k = detail::b_zero_coefficients(opt.coefficients);
  const double x = nu / T, nu2 = nu * nu;
  // Everything is scaled by e^{-3x}: the bracket grows like e^{3x} and so
  // does cosh^2(x/2) (cosh x + 1)^2.
  auto ch = [x](int n) { return 0.5 * (std::exp(n * x - 3 * x) + std::exp(-n * x - 3 * x)); };
  auto sh = [x](int n) { return 0.5 * (std::exp(n * x - 3 * x) - std::exp(-n * x - 3 * x)); };

  const double bracket = k.sinh1 * nu2 * sh(1) + k.sinh3 * nu2 * sh(3)
                       + (k.cosh3_a * nu2 + k.cosh3_c) * nu * ch(3)
                       + (k.cosh1_a * nu2 + k.cosh1_c) * nu * ch(1)
                       + (k.cosh2_a * nu2 + k.cosh2_c) * nu * ch(2)
                       + (k.const_a * nu2 + k.const_c) * nu * std::exp(-3 * x);
  const double half = 0.5 * (1.0 + std::exp(-x));                     // cosh(x/2) e^{-x/2}
  const double full = 0.5 * (1.0 + std::exp(-2 * x)) + std::exp(-x);  // (cosh x + 1) e^{-x}
  const double nu_power = opt.nu_prefactor == NuPrefactor::printed ? std::pow(nu, 1.5) : nu2 * nu;
  const double value = bracket / (nu_power * half * half * full * full);
  if (!std::isfinite(value)) throw DomainError("B=0 formula overflows at nu=" + std::to_string(nu) + ", T=" + std::to_string(T));
  return value;
}

inline double nu_of(double b, double D) { return std::sqrt(1.0 + b * b + D * D); }

}  // namespace msg::analytic

#endif  // MSG_ANALYTIC_HPP_
