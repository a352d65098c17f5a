// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "randpe/pauli.hpp"
#include "randpe/rng.hpp"
#include "test_helpers.hpp"

using namespace randpe;

TEST_CASE("parse: two-term Hamiltonian") {
  const Hamiltonian h = parse_hamiltonian("-1.0 [Z0 Z1]\n0.5 [X0]");
  CHECK(h.terms.size() == 2);
  CHECK(h.qubit_count == 2);
  // canonical order: [X0] before [Z0 Z1]
  CHECK(h.terms[0].factors == std::map<unsigned, Pauli>{{0, Pauli::X}});
  CHECK(h.terms[0].coefficient == 0.5);
  CHECK(h.terms[1].coefficient == -1.0);
}

TEST_CASE("parse: identity term and comments") {
  const Hamiltonian h = parse_hamiltonian("# comment line\n0.25 []  # inline\n");
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms[0].is_identity());
  CHECK(h.terms[0].coefficient == 0.25);
  CHECK(h.qubit_count == 0);
}

TEST_CASE("parse: header fixes the register size") {
  const Hamiltonian h = parse_hamiltonian("qubits: 5\n1.0 [Z1]");
  CHECK(h.qubit_count == 5);
  CHECK_THROWS_WITH_AS(parse_hamiltonian("qubits: 1\n1.0 [Z3]"),
                       doctest::Contains("header"), std::runtime_error);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_hamiltonian("1.0 [X0 X0]"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_hamiltonian("1.0 [Z0]\nbogus"),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_AS(parse_hamiltonian("nan [Z0]"), std::runtime_error);
  CHECK_THROWS_AS(parse_hamiltonian("1.0 [Q0]"), std::runtime_error);
  CHECK_THROWS_AS(parse_hamiltonian("(1.0,2.0) [Z0]"), std::runtime_error);
}

TEST_CASE("canonicalize merges, cancels and is idempotent") {
  const PauliTerm x0_a{0.5, {{0, Pauli::X}}};
  const PauliTerm x0_b{0.5, {{0, Pauli::X}}};
  const Hamiltonian merged = canonicalize(Hamiltonian{{x0_a, x0_b}, 1});
  REQUIRE(merged.terms.size() == 1);
  CHECK(merged.terms[0].coefficient == 1.0);

  const PauliTerm x0_neg{-0.5, {{0, Pauli::X}}};
  const Hamiltonian cancelled = canonicalize(Hamiltonian{{x0_a, x0_neg}, 1});
  CHECK(cancelled.terms.empty());

  const Hamiltonian twice = canonicalize(merged);
  CHECK(is_canonical(merged));
  CHECK(twice.terms.size() == merged.terms.size());
  CHECK(twice.terms[0].coefficient == merged.terms[0].coefficient);
}

TEST_CASE("term_norm is |coefficient|") {
  CHECK(term_norm(PauliTerm{0.5, {{0, Pauli::X}, {1, Pauli::Z}}}) == 0.5);
  CHECK(term_norm(PauliTerm{-2.0, {}}) == 2.0);
  CHECK(term_norm(PauliTerm{0.0, {{3, Pauli::Y}}}) == 0.0);
}

TEST_CASE("support") {
  const Hamiltonian h = parse_hamiltonian("1.0 [Z0 Z1]\n1.0 [X3]");
  CHECK(support(h) == std::set<unsigned>{0, 1, 3});
  CHECK(support(parse_hamiltonian("1.0 []")).empty());
  CHECK(support(Hamiltonian{}).empty());
}

TEST_CASE("make_hamiltonian validates indices and coefficients") {
  CHECK_THROWS_AS(
      make_hamiltonian({PauliTerm{1.0, {{4, Pauli::X}}}}, 3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_hamiltonian({PauliTerm{std::nan(""), {{0, Pauli::X}}}}, 1),
      std::invalid_argument);
}

TEST_CASE("serialize/parse round-trip is exact") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PauliTerm> terms;
    const unsigned qubits = 1 + static_cast<unsigned>(rng.next_below(5));
    const std::size_t n_terms = 1 + rng.next_below(6);
    for (std::size_t i = 0; i < n_terms; ++i) {
      PauliTerm t;
      t.coefficient = rng.next_double(-3.0, 3.0);
      for (unsigned q = 0; q < qubits; ++q) {
        switch (rng.next_below(4)) {
          case 1: t.factors.emplace(q, Pauli::X); break;
          case 2: t.factors.emplace(q, Pauli::Y); break;
          case 3: t.factors.emplace(q, Pauli::Z); break;
          default: break;
        }
      }
      terms.push_back(std::move(t));
    }
    const Hamiltonian h = make_hamiltonian(std::move(terms), qubits);
    const Hamiltonian reparsed = parse_hamiltonian(serialize_hamiltonian(h));
    REQUIRE(reparsed.terms.size() == h.terms.size());
    CHECK(reparsed.qubit_count == h.qubit_count);
    for (std::size_t i = 0; i < h.terms.size(); ++i) {
      CHECK(reparsed.terms[i].coefficient == h.terms[i].coefficient);
      CHECK(same_factors(reparsed.terms[i], h.terms[i]));
    }
  }
}

TEST_CASE("coefficient_one_norm") {
  const Hamiltonian h = parse_hamiltonian("-1.0 [Z0 Z1]\n0.5 [X0]");
  CHECK(coefficient_one_norm(h) == doctest::Approx(1.5));
}
