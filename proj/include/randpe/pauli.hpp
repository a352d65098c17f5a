// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace randpe {

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

/// One weighted Pauli string. Absent qubit indices carry identity factors;
/// an empty factor map is the identity term. Coefficients are real, so any
/// sum of these terms is Hermitian by construction.
struct PauliTerm {
  double coefficient = 0.0;
  std::map<unsigned, Pauli> factors;  // qubit index -> axis, keys unique

  bool is_identity() const { return factors.empty(); }
};

/// Operator norm of a term: |coefficient|, since every Pauli string
/// (including the empty one) has unit operator norm.
double term_norm(const PauliTerm& t);

bool same_factors(const PauliTerm& a, const PauliTerm& b);

/// Canonical term order: lexicographic in the (index, axis) sequence with
/// X < Y < Z; the identity term sorts first.
bool factor_less(const PauliTerm& a, const PauliTerm& b);

struct Hamiltonian {
  std::vector<PauliTerm> terms;
  // Explicit register size: may exceed the largest index used, so a sampled
  // Hamiltonian that drops high-index terms still reports reduced support
  // against the original register.
  unsigned qubit_count = 0;

  std::size_t term_count() const { return terms.size(); }
};

/// Validates indices and coefficients, then canonicalizes.
/// qubit_count must cover every factor index.
Hamiltonian make_hamiltonian(std::vector<PauliTerm> terms,
                             unsigned qubit_count);

/// Merges terms with identical factor maps (summing coefficients), drops
/// terms whose merged coefficient is exactly zero, and sorts terms into
/// canonical order. Idempotent.
Hamiltonian canonicalize(const Hamiltonian& h);

bool is_canonical(const Hamiltonian& h);

/// Qubits touched by a non-identity factor of some term.
std::set<unsigned> support(const Hamiltonian& h);

/// Sum of |coefficient| over all terms (triangle-inequality bound on ||H||).
double coefficient_one_norm(const Hamiltonian& h);

/// Parses the term-list text format:
///
///   # comment
///   qubits: 4            (optional header; may only appear once)
///   -1.0 [Z0 Z1]
///   0.5  [X0]
///   0.25 []              (identity term)
///
/// One term per line, axis in {X,Y,Z}. The result is canonical and
/// qubit_count is 1 + the largest index used (or the header value, if that
/// is larger; a header smaller than an used index is an error).
/// Throws std::runtime_error with the offending line number on malformed
/// input, duplicate qubit indices within a term, or non-finite coefficients.
Hamiltonian parse_hamiltonian(std::string_view text);

/// Inverse of parse_hamiltonian for canonical inputs: emits the header and
/// one term per line with 17 significant digits, so parse(serialize(h)) == h.
std::string serialize_hamiltonian(const Hamiltonian& h);

std::string to_string(const PauliTerm& t);

Hamiltonian load_hamiltonian_file(const std::string& path);

}  // namespace randpe
