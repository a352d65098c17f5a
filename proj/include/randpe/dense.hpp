// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "randpe/pauli.hpp"

namespace randpe {

/// Dense realization is refused above this register size (2^14 * 2^14
/// complex doubles is already 4 GiB).
inline constexpr unsigned kDenseQubitCutoff = 14;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Computational-basis matrix of h, qubit 0 = least significant bit.
/// Hermitian to machine precision. Parallel over columns; each column is
/// written by exactly one thread, so the result is bit-identical to the
/// serial kernel for any thread count.
Matrix to_dense_matrix(const Hamiltonian& h);

/// Reference kernel: same column construction, no OpenMP.
Matrix to_dense_matrix_serial(const Hamiltonian& h);

/// y = H x without forming the matrix. Parallel over output entries.
Vector apply_hamiltonian(const Hamiltonian& h, const Vector& x);
Vector apply_hamiltonian_serial(const Hamiltonian& h, const Vector& x);

/// <psi| c P |psi> for a single term, evaluated matrix-free. The sum is
/// blocked so the accumulation order is fixed for any thread count.
double expectation(const Vector& psi, const PauliTerm& t);
double expectation_serial(const Vector& psi, const PauliTerm& t);

/// <psi| H |psi>, term by term.
double expectation(const Vector& psi, const Hamiltonian& h);

}  // namespace randpe
