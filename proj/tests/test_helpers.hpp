// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "randpe/dense.hpp"
#include "randpe/pauli.hpp"
#include "randpe/sampler.hpp"

namespace randpe::testing {

// Independent dense oracle: explicit 2x2 matrices combined with a
// hand-rolled Kronecker product, qubit 0 on the least significant side.
// Shares no code with the column-kernel builder it checks.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Matrix single_qubit_matrix(Pauli axis) {
  Matrix m(2, 2);
  const std::complex<double> i{0.0, 1.0};
  switch (axis) {
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Matrix kron_oracle(const Hamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.qubit_count;
  Matrix total = Matrix::Zero(dim, dim);
  for (const auto& term : h.terms) {
    Matrix op = Matrix::Identity(1, 1);
    for (unsigned q = h.qubit_count; q-- > 0;) {
      const auto it = term.factors.find(q);
      op = it == term.factors.end()
               ? kron(op, Matrix::Identity(2, 2))
               : kron(op, single_qubit_matrix(it->second));
    }
    total += term.coefficient * op;
  }
  return total;
}

inline Hamiltonian tfim_chain(unsigned qubits, double coupling, double field) {
  std::vector<PauliTerm> terms;
  for (unsigned q = 0; q + 1 < qubits; ++q) {
    terms.push_back({-coupling, {{q, Pauli::Z}, {q + 1, Pauli::Z}}});
  }
  for (unsigned q = 0; q < qubits; ++q) {
    terms.push_back({-field, {{q, Pauli::X}}});
  }
  return make_hamiltonian(std::move(terms), qubits);
}

// The sampled operator a given draw multiset produces, built directly from
// the defining sum (1/N) sum_i H_{l_i} / f(l_i) without canonicalizing
// through the sampler.
inline Hamiltonian sampled_from_counts(
    const Hamiltonian& h, const std::map<std::size_t, std::uint64_t>& counts,
    std::uint64_t n_draws, const std::vector<double>& weights) {
  std::vector<PauliTerm> terms;
  for (const auto& [j, count] : counts) {
    PauliTerm t = h.terms[j];
    t.coefficient *= static_cast<double>(count) /
                     (static_cast<double>(n_draws) * weights[j]);
    terms.push_back(t);
  }
  return canonicalize(Hamiltonian{terms, h.qubit_count});
}

// Enumerates every draw sequence of length n over term indices
// {0..term_count-1}, invoking visit(counts, probability).
template <typename Visit>
void for_each_outcome(std::size_t term_count, std::uint64_t n_draws,
                      const std::vector<double>& weights, Visit visit) {
  std::vector<std::size_t> sequence(n_draws, 0);
  while (true) {
    double probability = 1.0;
    std::map<std::size_t, std::uint64_t> counts;
    for (std::size_t l : sequence) {
      probability *= weights[l];
      ++counts[l];
    }
    visit(counts, probability);
    std::size_t pos = 0;
    while (pos < n_draws && ++sequence[pos] == term_count) {
      sequence[pos] = 0;
      ++pos;
    }
    if (pos == n_draws) break;
  }
}

inline std::string data_path(const std::string& name) {
  const char* dir = std::getenv("RANDPE_DATA");
  return (dir ? std::string(dir) : std::string("data")) + "/" + name;
}

}  // namespace randpe::testing
