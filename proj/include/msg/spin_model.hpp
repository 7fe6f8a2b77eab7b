#ifndef MSG_SPIN_MODEL_HPP_
#define MSG_SPIN_MODEL_HPP_

// Two-spin XXZ chain with a z-directed Dzyaloshinskii-Moriya term and
// homogeneous (B) / inhomogeneous (b) fields, its Gibbs state (k = 1), and the
// four-qubit resource built from two identical chains.

#include <algorithm>
#include <cmath>
#include <string>

#include "msg/errors.hpp"
#include "msg/linalg.hpp"

namespace msg {

/// One spin-model instance. J_x = J_y = 1 is fixed by the model.
struct ModelParams {
  double jz = 0.0;
  double B = 0.0;  // homogeneous field
  double b = 0.0;  // inhomogeneous field
  double D = 0.0;  // DM strength along z
  double T = 1.0;  // temperature, k = 1
};

class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  /// Validates Hermiticity, unit trace and positivity.
  DensityMatrix(ComplexMatrix mat, int qubits) : mat_(std::move(mat)), qubits_(qubits) {
    if (qubits_ < 1 || mat_.dim() != (std::size_t{1} << qubits_))
      throw DimensionMismatch("density matrix of dim " + std::to_string(mat_.dim()) + " for " +
                              std::to_string(qubits_) + " qubits");
    if (const double h = hermiticity_defect(mat_); h > kTolerance)
      throw InvalidState("Hermiticity defect " + std::to_string(h));
    if (const double t = std::abs(mat_.trace() - Complex(1.0)); t > kTolerance)
      throw InvalidState("trace defect " + std::to_string(t));
    if (const double lo = herm_eig(mat_).eigenvalues.front(); lo < -kTolerance)
      throw InvalidState("minimum eigenvalue " + std::to_string(lo));
  }

  static DensityMatrix maximally_mixed(int qubits) {
    const std::size_t d = std::size_t{1} << qubits;
    return {ComplexMatrix::identity(d) * Complex(1.0 / static_cast<double>(d)), qubits};
  }

  const ComplexMatrix& mat() const { return mat_; }
  int qubits() const { return qubits_; }

  double purity() const { return (mat_ * mat_).trace().real(); }

 private:
  ComplexMatrix mat_;
  int qubits_;
};

/// H = 1/2 [XX + YY + Jz ZZ + D (XY - YX) + (B+b) ZI + (B-b) IZ].
inline ComplexMatrix build_hamiltonian(const ModelParams& p) {
  using namespace pauli;
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix h = kron(x(), x()) + kron(y(), y());
  h += kron(z(), z()) * Complex(p.jz);
  h += (kron(x(), y()) - kron(y(), x())) * Complex(p.D);
  h += kron(z(), id) * Complex(p.B + p.b);
  h += kron(id, z()) * Complex(p.B - p.b);
  return h * Complex(0.5);
}

/// exp(-h/T) / tr, computed with the ground energy shifted out so that very
/// small T does not overflow.
inline DensityMatrix thermal_state(const ComplexMatrix& h, double temperature) {
  if (!(temperature > 0.0)) throw NonPositiveTemperature(temperature);
  const HermEig eig = herm_eig(h);
  const double ground = eig.eigenvalues.front();
  double z = 0.0;
  for (double e : eig.eigenvalues) z += std::exp(-(e - ground) / temperature);
  ComplexMatrix rho = spectral_apply(eig, [&](double e) { return std::exp(-(e - ground) / temperature) / z; });
  for (std::size_t i = 0; i < rho.dim(); ++i) rho(i, i) = rho(i, i).real();
  return {std::move(rho), static_cast<int>(qubit_count(h))};
}

/// Unnormalized non-zero entries of exp(-H/T) and the partition function.
struct ClosedFormElements {
  double gamma = 0.0;  // exp(Jz / 2T)
  double nu = 0.0;     // sqrt(1 + b^2 + D^2)
  Complex rho11, rho22, rho23, rho32, rho33, rho44;
  double partition = 0.0;
};

inline ClosedFormElements closed_form_elements(const ModelParams& p) {
  const double t = p.T;
  if (!(t > 0.0)) throw NonPositiveTemperature(t);
  ClosedFormElements e;
  e.gamma = std::exp(p.jz / (2.0 * t));
  e.nu = std::sqrt(1.0 + p.b * p.b + p.D * p.D);
  const double ch_b = std::cosh(p.B / t), sh_b = std::sinh(p.B / t);
  const double ch_nu = std::cosh(e.nu / t), sh_nu = std::sinh(e.nu / t);

  e.rho11 = (ch_b - sh_b) / e.gamma;
  e.rho22 = e.gamma * (ch_nu - p.b / e.nu * sh_nu);
  e.rho23 = -e.gamma * Complex(1.0, p.D) / e.nu * sh_nu;
  e.rho32 = -e.gamma * Complex(1.0, -p.D) / e.nu * sh_nu;
  e.rho33 = e.gamma * (ch_nu + p.b / e.nu * sh_nu);
  e.rho44 = (ch_b + sh_b) / e.gamma;
  // The normalizer's field argument is B; it is the only value for which
  // rho11 + rho44 = 2 gamma^-1 cosh(B/T) and the trace is one.
  e.partition = 2.0 * (ch_b / e.gamma + e.gamma * ch_nu);
  return e;
}

inline DensityMatrix closed_form_state(const ModelParams& p) {
  const ClosedFormElements e = closed_form_elements(p);
  ComplexMatrix rho(4);
  rho(0, 0) = e.rho11;
  rho(1, 1) = e.rho22;
  rho(1, 2) = e.rho23;
  rho(2, 1) = e.rho32;
  rho(2, 2) = e.rho33;
  rho(3, 3) = e.rho44;
  return {rho * Complex(1.0 / e.partition), 2};
}

/// Two-qubit chain state for p.
inline DensityMatrix chain_state(const ModelParams& p) { return thermal_state(build_hamiltonian(p), p.T); }

/// SWAP_{2,3}(rho x rho): the two chains' first spins go to qubits 1 and 2
/// (Alice), the second spins to qubits 3 and 4 (Bob).
inline DensityMatrix effective_state(const ModelParams& p) {
  const DensityMatrix rho = chain_state(p);
  return {permute_qubits(kron(rho.mat(), rho.mat()), {1, 3, 2, 4}), 4};
}

}  // namespace msg

#endif  // MSG_SPIN_MODEL_HPP_
