// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "randpe/dense.hpp"

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace randpe {

namespace {

using std::complex;

// <i| P |j> is nonzero only for i = j ^ flip, where flip marks the X and Y
// factors. The value is i^{#Y} * (-1)^{popcount(j & sign)}, with sign
// marking the Y and Z factors.
struct TermKernel {
  std::uint64_t flip = 0;
  std::uint64_t sign = 0;
  complex<double> scaled_coeff;  // coefficient * i^{#Y}
};

TermKernel make_kernel(const PauliTerm& t) {
  TermKernel k;
  unsigned y_count = 0;
  for (const auto& [q, axis] : t.factors) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (axis) {
      case Pauli::X:
        k.flip |= bit;
        break;
      case Pauli::Y:
        k.flip |= bit;
        k.sign |= bit;
        ++y_count;
        break;
      case Pauli::Z:
        k.sign |= bit;
        break;
    }
  }
  static const complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  k.scaled_coeff = t.coefficient * i_pow[y_count % 4];
  return k;
}

std::vector<TermKernel> make_kernels(const Hamiltonian& h) {
  std::vector<TermKernel> kernels;
  kernels.reserve(h.terms.size());
  for (const auto& t : h.terms) kernels.push_back(make_kernel(t));
  return kernels;
}

inline double parity_sign(std::uint64_t bits) {
  return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

std::int64_t dense_dim(const Hamiltonian& h) {
  if (h.qubit_count > kDenseQubitCutoff) {
    throw std::invalid_argument("register of " + std::to_string(h.qubit_count) +
                                " qubits exceeds the dense cutoff of " +
                                std::to_string(kDenseQubitCutoff));
  }
  return std::int64_t{1} << h.qubit_count;
}

template <bool Parallel>
Matrix build_dense(const Hamiltonian& h) {
  const std::int64_t dim = dense_dim(h);
  const auto kernels = make_kernels(h);
  Matrix m = Matrix::Zero(dim, dim);
#pragma omp parallel for schedule(static) if (Parallel && dim >= 64)
  for (std::int64_t col = 0; col < dim; ++col) {
    const auto j = static_cast<std::uint64_t>(col);
    for (const auto& k : kernels) {
      m(static_cast<std::int64_t>(j ^ k.flip), col) +=
          k.scaled_coeff * parity_sign(j & k.sign);
    }
  }
  return m;
}

template <bool Parallel>
Vector apply_impl(const Hamiltonian& h, const Vector& x) {
  const std::int64_t dim = dense_dim(h);
  if (x.size() != dim) {
    throw std::invalid_argument("state dimension " + std::to_string(x.size()) +
                                " does not match 2^" +
                                std::to_string(h.qubit_count));
  }
  const auto kernels = make_kernels(h);
  Vector y(dim);
#pragma omp parallel for schedule(static) if (Parallel && dim >= 4096)
  for (std::int64_t row = 0; row < dim; ++row) {
    const auto i = static_cast<std::uint64_t>(row);
    complex<double> acc = 0;
    for (const auto& k : kernels) {
      const std::uint64_t j = i ^ k.flip;
      acc += k.scaled_coeff * parity_sign(j & k.sign) *
             x[static_cast<std::int64_t>(j)];
    }
    y[row] = acc;
  }
  return y;
}

complex<double> term_quadratic_form_block(const Vector& psi,
                                          const TermKernel& k,
                                          std::int64_t begin,
                                          std::int64_t end) {
  complex<double> acc = 0;
  for (std::int64_t col = begin; col < end; ++col) {
    const auto j = static_cast<std::uint64_t>(col);
    acc += std::conj(psi[static_cast<std::int64_t>(j ^ k.flip)]) *
           parity_sign(j & k.sign) * psi[col];
  }
  return acc;
}

template <bool Parallel>
double expectation_impl(const Vector& psi, const PauliTerm& t) {
  const std::int64_t dim = psi.size();
  const TermKernel k = make_kernel(t);
  // Fixed-size blocks summed in index order: the reduction tree does not
  // depend on the thread count, so results are bit-identical for any
  // number of workers.
  constexpr std::int64_t kBlock = 4096;
  const std::int64_t n_blocks = (dim + kBlock - 1) / kBlock;
  complex<double> total = 0;
  if (n_blocks <= 1 || !Parallel) {
    total = term_quadratic_form_block(psi, k, 0, dim);
  } else {
    std::vector<complex<double>> partial(n_blocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < n_blocks; ++b) {
      partial[b] = term_quadratic_form_block(psi, k, b * kBlock,
                                             std::min(dim, (b + 1) * kBlock));
    }
    for (const auto& p : partial) total += p;
  }
  return (k.scaled_coeff * total).real();
}

}  // namespace

Matrix to_dense_matrix(const Hamiltonian& h) { return build_dense<true>(h); }

Matrix to_dense_matrix_serial(const Hamiltonian& h) {
  return build_dense<false>(h);
}

Vector apply_hamiltonian(const Hamiltonian& h, const Vector& x) {
  return apply_impl<true>(h, x);
}

Vector apply_hamiltonian_serial(const Hamiltonian& h, const Vector& x) {
  return apply_impl<false>(h, x);
}

double expectation(const Vector& psi, const PauliTerm& t) {
  return expectation_impl<true>(psi, t);
}

double expectation_serial(const Vector& psi, const PauliTerm& t) {
  return expectation_impl<false>(psi, t);
}

double expectation(const Vector& psi, const Hamiltonian& h) {
  double sum = 0.0;
  for (const auto& t : h.terms) sum += expectation(psi, t);
  return sum;
}

}  // namespace randpe
