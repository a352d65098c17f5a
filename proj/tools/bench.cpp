// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

//
// Serial-vs-OpenMP kernel benchmark: dense matrix construction, matrix-free
// apply, per-term expectation, and the ensemble sweep driver.
//

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "randpe/dense.hpp"
#include "randpe/pauli.hpp"
#include "randpe/rng.hpp"
#include "randpe/sweep.hpp"

namespace {

using randpe::Hamiltonian;
using randpe::PauliTerm;

Hamiltonian tfim_chain(unsigned qubits, double coupling, double field) {
  std::vector<PauliTerm> terms;
  for (unsigned q = 0; q + 1 < qubits; ++q) {
    terms.push_back({-coupling, {{q, randpe::Pauli::Z}, {q + 1, randpe::Pauli::Z}}});
  }
  for (unsigned q = 0; q < qubits; ++q) {
    terms.push_back({-field, {{q, randpe::Pauli::X}}});
  }
  return randpe::make_hamiltonian(std::move(terms), qubits);
}

double time_ms(const std::function<void()>& body, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(stop - start)
                        .count());
  }
  return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    const Hamiltonian h = tfim_chain(11, 1.0, 0.5);
    volatile double sink = 0.0;
    const double serial = time_ms(
        [&] { sink = randpe::to_dense_matrix_serial(h).real().sum(); }, 3);
    const double parallel =
        time_ms([&] { sink = randpe::to_dense_matrix(h).real().sum(); }, 3);
    report("dense build (11 qubits)", serial, parallel);
  }

  {
    const Hamiltonian h = tfim_chain(20, 1.0, 0.5);
    randpe::Vector psi(randpe::Vector::Zero(std::int64_t{1} << 20));
    randpe::SplitMix64 rng(7);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      psi[i] = {rng.next_double(-1, 1), rng.next_double(-1, 1)};
    }
    psi /= psi.norm();
    volatile double sink = 0.0;
    const double serial =
        time_ms([&] { sink = randpe::apply_hamiltonian_serial(h, psi).squaredNorm(); }, 3);
    const double parallel =
        time_ms([&] { sink = randpe::apply_hamiltonian(h, psi).squaredNorm(); }, 3);
    report("apply (20 qubits)", serial, parallel);

    const PauliTerm& term = h.terms.front();
    const double eserial = time_ms(
        [&] {
          double acc = 0.0;
          for (int r = 0; r < 16; ++r) acc += randpe::expectation_serial(psi, term);
          sink = acc;
        },
        3);
    const double eparallel = time_ms(
        [&] {
          double acc = 0.0;
          for (int r = 0; r < 16; ++r) acc += randpe::expectation(psi, term);
          sink = acc;
        },
        3);
    report("expectation x16 (20 qubits)", eserial, eparallel);
  }

  {
    randpe::SweepConfig cfg;
    cfg.mode = "sweep";
    cfg.seed = 11;
    cfg.output = "bench.csv";
    cfg.hamiltonian_path = "";  // built below instead of loaded
    // run_sweep loads from a file, so write the instance to a temp path.
    const Hamiltonian h = tfim_chain(8, 1.0, 0.5);
    const std::string path = "/tmp/randpe_bench_tfim8.ham";
    randpe::write_text_file(path, randpe::serialize_hamiltonian(h));
    cfg.hamiltonian_path = path;
    cfg.rho_values = {0.0, 1.0};
    cfg.sample_counts = {16, 64};
    cfg.ensemble_size = 48;
    const double serial = time_ms([&] { randpe::run_sweep(cfg, 1); }, 2);
    const double parallel = time_ms(
        [&] { randpe::run_sweep(cfg, omp_get_max_threads()); }, 2);
    report("sweep ensemble (8 qubits)", serial, parallel);
  }

  return 0;
}
