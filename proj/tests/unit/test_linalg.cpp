#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "msg/linalg.hpp"
#include "oracles.hpp"

namespace msg {
namespace {

const Complex kI(0.0, 1.0);

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4)), 0.0);
}

TEST(Kron, PauliZZIsDiagonalParity) {
  EXPECT_EQ(max_abs_diff(kron(pauli::z(), pauli::z()), ComplexMatrix::diagonal({1, -1, -1, 1})), 0.0);
}

TEST(Kron, XYCornerEntryAgainstColumnOracle) {
  const ComplexMatrix xy = kron(pauli::x(), pauli::y());
  const ComplexMatrix ref = oracle::kron_by_columns(pauli::x(), pauli::y());
  EXPECT_EQ(ref(0, 3), -kI);
  EXPECT_EQ(xy(0, 3), -kI);
  EXPECT_EQ(max_abs_diff(xy, ref), 0.0);
}

TEST(Kron, AssociativeOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_matrix(2, rng), b = oracle::random_matrix(2, rng), c = oracle::random_matrix(2, rng);
    EXPECT_LE(max_abs_diff(kron(a, kron(b, c)), kron(kron(a, b), c)), 1e-14);
  }
}

TEST(HermEig, DiagonalInput) {
  const HermEig e = herm_eig(ComplexMatrix::diagonal({3, 1}));
  ASSERT_EQ(e.eigenvalues.size(), 2u);
  EXPECT_DOUBLE_EQ(e.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(e.eigenvalues[1], 3.0);
}

TEST(HermEig, PauliX) {
  const HermEig e = herm_eig(pauli::x());
  EXPECT_NEAR(e.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-15);
  // (|0> - |1>)/sqrt2 and (|0> + |1>)/sqrt2 up to phase
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(e.eigenvectors(0, 0)), r, 1e-15);
  EXPECT_NEAR(std::abs(e.eigenvectors(0, 0) + e.eigenvectors(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.eigenvectors(0, 1) - e.eigenvectors(1, 1)), 0.0, 1e-15);
}

TEST(HermEig, XXPlusYYHalfMatchesCharacteristicPolynomial) {
  // H(Jz = B = b = D = 0) = |01><10| + |10><01|
  ComplexMatrix h(4);
  h(1, 2) = 1.0;
  h(2, 1) = 1.0;
  const auto poly = oracle::characteristic_polynomial(h);  // x^4 - x^2
  EXPECT_NEAR(std::abs(poly[2] + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(poly[0]), 0.0, 1e-15);

  const HermEig e = herm_eig(h);
  const double expected[] = {-1.0, 0.0, 0.0, 1.0};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(e.eigenvalues[k], expected[k], 1e-14);
    EXPECT_NEAR(std::abs(oracle::eval_polynomial(poly, e.eigenvalues[k])), 0.0, 1e-13);
  }
}

TEST(HermEig, RejectsNonHermitian) {
  ComplexMatrix a(2);
  a(0, 1) = 1.0;
  EXPECT_THROW(herm_eig(a), NotHermitian);
}

TEST(HermEig, DeterministicForIdenticalInput) {
  std::mt19937_64 rng(3);
  const auto a = oracle::random_hermitian(16, rng);
  const HermEig e1 = herm_eig(a), e2 = herm_eig(a);
  EXPECT_EQ(e1.eigenvalues, e2.eigenvalues);
  EXPECT_EQ(max_abs_diff(e1.eigenvectors, e2.eigenvectors), 0.0);
}

TEST(HermEig, ReconstructsRandom16x16) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = oracle::random_hermitian(16, rng);
    const HermEig e = herm_eig(a);
    const ComplexMatrix& v = e.eigenvectors;
    EXPECT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(16)), 1e-12);
    const ComplexMatrix lambda = ComplexMatrix::diagonal(e.eigenvalues);
    EXPECT_LE(max_abs_diff(v * lambda * v.adjoint(), a), 1e-12);
    EXPECT_LE(max_abs_diff(a * v, v * lambda), 1e-12);
    for (std::size_t k = 1; k < 16; ++k) EXPECT_LE(e.eigenvalues[k - 1], e.eigenvalues[k]);
  }
}

TEST(HermEig, DegenerateSpectrum) {
  const HermEig e = herm_eig(ComplexMatrix::identity(16) * Complex(0.25));
  for (double l : e.eigenvalues) EXPECT_DOUBLE_EQ(l, 0.25);
}

TEST(ExpmHermitian, ZeroMatrixGivesIdentity) {
  EXPECT_LE(max_abs_diff(expm_hermitian(ComplexMatrix(4), 2.5), ComplexMatrix::identity(4)), 1e-15);
}

TEST(ExpmHermitian, Diagonal) {
  const ComplexMatrix e = expm_hermitian(ComplexMatrix::diagonal({1, 2}), 1.0);
  EXPECT_NEAR(e(0, 0).real(), std::exp(1.0), 1e-14);
  EXPECT_NEAR(e(1, 1).real(), std::exp(2.0), 1e-14);
  EXPECT_EQ(e(0, 1), Complex{});
}

TEST(ExpmHermitian, PauliXAgainstTaylorSeries) {
  const ComplexMatrix e = expm_hermitian(pauli::x(), 1.0);
  const ComplexMatrix taylor = oracle::expm_taylor(pauli::x(), 1.0, 30);
  const ComplexMatrix closed{{std::cosh(1.0), std::sinh(1.0)}, {std::sinh(1.0), std::cosh(1.0)}};
  EXPECT_LE(max_abs_diff(taylor, closed), 1e-14);
  EXPECT_LE(max_abs_diff(e, taylor), 1e-12);
}

TEST(ExpmHermitian, RandomAgainstTaylorSeries) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = oracle::random_hermitian(4, rng) * Complex(0.3);
    EXPECT_LE(max_abs_diff(expm_hermitian(a, 0.7), oracle::expm_taylor(a, 0.7, 40)), 1e-12);
  }
}

TEST(ExpmHermitian, InverseProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_hermitian(16, rng);
    const double s = 0.4;
    EXPECT_LE(max_abs_diff(expm_hermitian(a, s) * expm_hermitian(a, -s), ComplexMatrix::identity(16)), 1e-10);
  }
}

ComplexMatrix basis_projector(std::size_t dim, std::size_t index) {
  ComplexMatrix p(dim);
  p(index, index) = 1.0;
  return p;
}

TEST(PermuteQubits, IdentityPermutation) {
  std::mt19937_64 rng(9);
  const auto a = oracle::random_matrix(16, rng);
  EXPECT_EQ(max_abs_diff(permute_qubits(a, {1, 2, 3, 4}), a), 0.0);
}

TEST(PermuteQubits, Swap23OnBasisState) {
  // |0100> is index 4; swapping qubits 2 and 3 gives |0010>, index 2.
  const ComplexMatrix out = permute_qubits(basis_projector(16, 4), {1, 3, 2, 4});
  EXPECT_EQ(max_abs_diff(out, basis_projector(16, 2)), 0.0);
}

TEST(PermuteQubits, CyclicMovesQubitToTarget) {
  // qubit 1 -> position 2, 2 -> 3, 3 -> 1: |100> (4) becomes |010> (2)
  EXPECT_EQ(max_abs_diff(permute_qubits(basis_projector(8, 4), {2, 3, 1}), basis_projector(8, 2)), 0.0);
}

TEST(PermuteQubits, TranspositionIsInvolutionAndPreservesSpectrum) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_hermitian(16, rng);
    const ComplexMatrix once = permute_qubits(a, {1, 3, 2, 4});
    EXPECT_EQ(max_abs_diff(permute_qubits(once, {1, 3, 2, 4}), a), 0.0);
    EXPECT_LE(std::abs(once.trace() - a.trace()), 1e-14);
    const auto e1 = herm_eig(a).eigenvalues, e2 = herm_eig(once).eigenvalues;
    for (std::size_t k = 0; k < e1.size(); ++k) EXPECT_NEAR(e1[k], e2[k], 1e-12);
  }
}

TEST(PermuteQubits, Errors) {
  EXPECT_THROW(permute_qubits(ComplexMatrix(6), {1, 2}), DimensionMismatch);
  EXPECT_THROW(permute_qubits(ComplexMatrix(16), {1, 2, 3}), DimensionMismatch);
  EXPECT_THROW(permute_qubits(ComplexMatrix(4), {1, 1}), DomainError);
}

ComplexMatrix singlet_projector() {
  ComplexMatrix s(4);
  s(1, 1) = 0.5;
  s(2, 2) = 0.5;
  s(1, 2) = -0.5;
  s(2, 1) = -0.5;
  return s;
}

TEST(PartialTranspose, MaximallyMixedUnchanged) {
  const ComplexMatrix mixed = ComplexMatrix::identity(4) * Complex(0.25);
  EXPECT_EQ(max_abs_diff(partial_transpose(mixed, {1}), mixed), 0.0);
}

TEST(PartialTranspose, SingletSpectrum) {
  const HermEig e = herm_eig(partial_transpose(singlet_projector(), {1}));
  EXPECT_NEAR(e.eigenvalues[0], -0.5, 1e-15);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(e.eigenvalues[k], 0.5, 1e-15);
}

TEST(PartialTranspose, FullTransposeAndInvolution) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_matrix(16, rng);
    EXPECT_EQ(max_abs_diff(partial_transpose(a, {1, 2, 3, 4}), a.transpose()), 0.0);
    const ComplexMatrix pt = partial_transpose(a, {2, 4});
    EXPECT_EQ(max_abs_diff(partial_transpose(pt, {2, 4}), a), 0.0);
    EXPECT_LE(std::abs(pt.trace() - a.trace()), 1e-14);
  }
}

TEST(PartialTranspose, RejectsQubitOutOfRange) {
  EXPECT_THROW(partial_transpose(ComplexMatrix(4), {3}), DimensionMismatch);
  EXPECT_THROW(partial_transpose(ComplexMatrix(5), {1}), DimensionMismatch);
}

TEST(TraceNorm, Basics) {
  EXPECT_NEAR(trace_norm(ComplexMatrix::identity(4)), 4.0, 1e-15);
  EXPECT_NEAR(trace_norm(ComplexMatrix::diagonal({1, -2})), 3.0, 1e-15);
  EXPECT_NEAR(trace_norm(partial_transpose(singlet_projector(), {1})), 2.0, 1e-14);
}

TEST(TraceNorm, BoundsTrace) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_hermitian(8, rng);
    EXPECT_GE(trace_norm(a) + 1e-12, std::abs(a.trace()));
  }
}

TEST(TraceNorm, RejectsNonHermitian) {
  ComplexMatrix a(2);
  a(1, 0) = kI;
  EXPECT_THROW(trace_norm(a), NotHermitian);
}

}  // namespace
}  // namespace msg
