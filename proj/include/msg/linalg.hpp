#ifndef MSG_LINALG_HPP_
#define MSG_LINALG_HPP_

// Dense complex-matrix kernel sized for the 2x2, 4x4 and 16x16 operators of a
// few-qubit simulation. Basis convention: qubit 1 is the most significant bit
// of the basis index, so |0011> on four qubits is index 3.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msg/errors.hpp"

namespace msg {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DimensionMismatch("initializer rows must form a square matrix");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

 private:
  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_)
      throw DimensionMismatch(std::to_string(dim_) + " vs " + std::to_string(o.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline double hermiticity_defect(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
  return m;
}

inline constexpr double kHermitianTolerance = 1e-10;

inline bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTolerance) {
  return hermiticity_defect(a) <= tol;
}

inline double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim()));
}

namespace pauli {

inline ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
inline ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace pauli

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

struct HermEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

namespace detail {

inline double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return s;
}

inline double frobenius_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return s;
}

}  // namespace detail

/// Cyclic complex Jacobi. Each rotation first removes the phase of a(p,q)
/// with diag(1, e^{-i phi}) and then applies a real Givens rotation, so
/// a <- U^H a U with U = diag-phase * rotation on the (p, q) plane.
inline HermEig herm_eig(const ComplexMatrix& input) {
  const double defect = hermiticity_defect(input);
  if (defect > kHermitianTolerance) throw NotHermitian("max |a - a^H| = " + std::to_string(defect));

  const std::size_t n = input.dim();
  ComplexMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = detail::frobenius_norm2(a);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = detail::off_diagonal_norm2(a);
    if (off <= 1e-32 * scale || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const Complex phase = a(p, q) / r;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();

        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const Complex upp = c, upq = s;
        const Complex uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // a <- a U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- U^H a
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // v <- v U
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermEig out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// V f(Lambda) V^H for a real spectral function f.
template <typename F>
ComplexMatrix spectral_apply(const HermEig& eig, F&& f) {
  const std::size_t n = eig.eigenvectors.dim();
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = v(r, k) * fk;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(v(c, k));
    }
  }
  return out;
}

/// exp(s * a) for Hermitian a.
inline ComplexMatrix expm_hermitian(const ComplexMatrix& a, double s) {
  return spectral_apply(herm_eig(a), [s](double lambda) { return std::exp(s * lambda); });
}

inline std::size_t qubit_count(const ComplexMatrix& a) {
  const std::size_t d = a.dim();
  if (d == 0 || (d & (d - 1)) != 0) throw DimensionMismatch("dim " + std::to_string(d) + " is not a power of two");
  std::size_t n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

/// Moves qubit k (1-based) to position perm[k-1], i.e. returns P a P^H with
/// P|q1...qn> = |q_{perm^-1(1)} ... q_{perm^-1(n)}>.
inline ComplexMatrix permute_qubits(const ComplexMatrix& a, std::span<const int> perm) {
  const std::size_t n = qubit_count(a);
  if (perm.size() != n) throw DimensionMismatch("permutation of size " + std::to_string(perm.size()) +
                                                " for " + std::to_string(n) + " qubits");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 1 || static_cast<std::size_t>(p) > n || seen[p - 1]) throw DomainError("not a permutation");
    seen[p - 1] = true;
  }

  const std::size_t d = a.dim();
  std::vector<std::size_t> target(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (i >> (n - 1 - k)) & 1U;
      j |= bit << (n - static_cast<std::size_t>(perm[k]));
    }
    target[i] = j;
  }
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(target[r], target[c]) = a(r, c);
  return out;
}

inline ComplexMatrix permute_qubits(const ComplexMatrix& a, std::initializer_list<int> perm) {
  return permute_qubits(a, std::span<const int>(perm.begin(), perm.size()));
}

/// Transposes the row/column indices of the listed qubits (1-based) only.
inline ComplexMatrix partial_transpose(const ComplexMatrix& a, std::span<const int> subsystem) {
  const std::size_t n = qubit_count(a);
  std::size_t mask = 0;
  for (int q : subsystem) {
    if (q < 1 || static_cast<std::size_t>(q) > n)
      throw DimensionMismatch("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    mask |= std::size_t{1} << (n - static_cast<std::size_t>(q));
  }
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t r2 = (r & ~mask) | (c & mask);
      const std::size_t c2 = (c & ~mask) | (r & mask);
      out(r2, c2) = a(r, c);
    }
  return out;
}

inline ComplexMatrix partial_transpose(const ComplexMatrix& a, std::initializer_list<int> subsystem) {
  return partial_transpose(a, std::span<const int>(subsystem.begin(), subsystem.size()));
}

inline double trace_norm(const ComplexMatrix& a) {
  const HermEig eig = herm_eig(a);
  double s = 0.0;
  for (double lambda : eig.eigenvalues) s += std::abs(lambda);
  return s;
}

}  // namespace msg

#endif  // MSG_LINALG_HPP_
