// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "randpe/dense.hpp"
#include "randpe/pauli.hpp"

namespace randpe {

/// Normalized complex amplitude vector of length 2^n, qubit 0 = LSB.
using QuantumState = Vector;

inline constexpr double kDegeneracyTol = 1e-10;

/// Full spectrum of a Hamiltonian. energies ascending; vectors holds the
/// matching eigenvectors as columns, each with its largest-magnitude
/// amplitude rotated to be real and positive (deterministic phase).
struct Eigensystem {
  Eigen::VectorXd energies;
  Matrix vectors;

  QuantumState state(Eigen::Index i) const { return vectors.col(i); }
};

/// The k lowest eigenpairs.
struct SpectrumSlice {
  Eigen::VectorXd energies;  // ascending
  Matrix states;             // matching columns, orthonormal
};

struct Gap {
  double value = 0.0;
  bool degenerate = false;  // value < kDegeneracyTol
};

/// Dense eigendecomposition of the full spectrum.
Eigensystem diagonalize(const Hamiltonian& h);

/// k lowest eigenpairs of h (1 <= k <= 2^n).
SpectrumSlice low_spectrum(const Hamiltonian& h, Eigen::Index k);

/// E_1 - E_0. Requires at least two energies.
Gap gap(const SpectrumSlice& s);
Gap gap(const Eigensystem& e);

double ground_energy(const Hamiltonian& h);

/// e^{-iHt} |psi> through the full eigendecomposition (no product-formula
/// error). The overload taking an Eigensystem reuses a prior factorization.
QuantumState evolve(const QuantumState& psi, const Hamiltonian& h, double t);
QuantumState evolve(const QuantumState& psi, const Eigensystem& es, double t);

/// Largest |eigenvalue| of A - B (their operator-norm distance).
double operator_norm_diff(const Hamiltonian& a, const Hamiltonian& b);

/// Operator 2-norm of a dense matrix (largest singular value).
double matrix_operator_norm(const Matrix& m);

}  // namespace randpe
