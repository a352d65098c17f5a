// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "randpe/solver.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace randpe {

namespace {

void fix_eigenvector_phases(Matrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double mag = std::abs(vectors(r, c));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    const std::complex<double> v = vectors(pivot, c);
    if (best > 0.0) vectors.col(c) *= std::conj(v) / best;
  }
}

}  // namespace

Eigensystem diagonalize(const Hamiltonian& h) {
  const Matrix m = to_dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed to converge on a " +
                             std::to_string(m.rows()) + "-dimensional matrix");
  }
  Eigensystem es{solver.eigenvalues(), solver.eigenvectors()};
  fix_eigenvector_phases(es.vectors);
  return es;
}

SpectrumSlice low_spectrum(const Hamiltonian& h, Eigen::Index k) {
  const Eigen::Index dim = Eigen::Index{1} << h.qubit_count;
  if (k < 1 || k > dim) {
    throw std::invalid_argument("requested " + std::to_string(k) +
                                " eigenpairs from a space of dimension " +
                                std::to_string(dim));
  }
  Eigensystem es = diagonalize(h);
  return SpectrumSlice{es.energies.head(k), es.vectors.leftCols(k)};
}

Gap gap(const SpectrumSlice& s) {
  if (s.energies.size() < 2) {
    throw std::invalid_argument("gap needs at least two energies");
  }
  const double g = s.energies[1] - s.energies[0];
  return Gap{g, g < kDegeneracyTol};
}

Gap gap(const Eigensystem& e) {
  if (e.energies.size() < 2) {
    throw std::invalid_argument("gap needs at least two energies");
  }
  const double g = e.energies[1] - e.energies[0];
  return Gap{g, g < kDegeneracyTol};
}

double ground_energy(const Hamiltonian& h) {
  return low_spectrum(h, 1).energies[0];
}

QuantumState evolve(const QuantumState& psi, const Eigensystem& es, double t) {
  Vector in_basis = es.vectors.adjoint() * psi;
  for (Eigen::Index i = 0; i < in_basis.size(); ++i) {
    in_basis[i] *= std::exp(std::complex<double>(0.0, -es.energies[i] * t));
  }
  return es.vectors * in_basis;
}

QuantumState evolve(const QuantumState& psi, const Hamiltonian& h, double t) {
  const Eigen::Index dim = Eigen::Index{1} << h.qubit_count;
  if (psi.size() != dim) {
    throw std::invalid_argument("state dimension does not match Hamiltonian");
  }
  return evolve(psi, diagonalize(h), t);
}

double operator_norm_diff(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.qubit_count != b.qubit_count) {
    throw std::invalid_argument("operator_norm_diff on registers of size " +
                                std::to_string(a.qubit_count) + " and " +
                                std::to_string(b.qubit_count));
  }
  const Matrix diff = to_dense_matrix(a) - to_dense_matrix(b);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed on difference matrix");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double matrix_operator_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

}  // namespace randpe
