// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpe/bounds.hpp"
#include "randpe/pauli.hpp"
#include "randpe/phase_estimation.hpp"

namespace randpe {

/// Configuration problems (bad file, unknown key, wrong type/value).
/// The CLI maps these to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One structured config document drives all three CLI modes. Versioned by
/// `schema`; unknown keys are errors, not warnings.
struct SweepConfig {
  std::string mode;  // "sweep" | "pe-session" | "bounds-audit"
  std::uint64_t seed = 0;
  std::string output;  // csv path (sweep, bounds-audit) or stem (pe-session)

  // sweep & pe-session
  std::string hamiltonian_path;
  std::string surrogate_path = "exact-ground-state";

  // sweep
  std::vector<double> rho_values;
  std::vector<std::uint64_t> sample_counts;  // N axis
  std::size_t ensemble_size = 100;

  // pe-session
  std::size_t sessions = 100;
  std::size_t experiments = 40;
  std::size_t grid_points = kDefaultGridPoints;
  double reps_cap = 4096.0;
  bool sampler_enabled = false;
  double sampler_rho = 1.0;
  std::uint64_t sampler_draws = 1;
  double sampler_floor = kDefaultWeightFloorFraction;

  // bounds-audit
  std::size_t strict_instances = 200;
  std::size_t perturbative_instances = 500;
  std::vector<unsigned> perturbative_qubits = {2, 3};
  std::size_t lemma_one_instances = 1000;
  std::size_t scaling_trials = 200;
  std::vector<std::uint64_t> scaling_m = {4, 16, 64, 256};
};

SweepConfig load_config(const std::string& path);
SweepConfig parse_config(const std::string& json_text);

/// Surrogate expectations file: lines of `<term-index> <expectation>`
/// aligned with the canonical term order; every index must appear once.
std::vector<double> load_surrogate_file(const std::string& path,
                                        std::size_t term_count);

/// Resolves "exact-ground-state" or a file path against a Hamiltonian.
std::vector<double> resolve_surrogate(const std::string& surrogate_path,
                                      const Hamiltonian& h);

/// One (rho, N) cell of the sampling sweep, aggregated over the ensemble.
/// shift_variance is the population variance of the sampled ground
/// energies (a single-member ensemble reports 0).
struct SweepRow {
  double rho = 0.0;
  std::uint64_t n_samples = 0;
  double mean_shift = 0.0;
  double shift_variance = 0.0;
  double mean_unique_terms = 0.0;
  double mean_qubit_support = 0.0;
};

inline constexpr const char* kSweepCsvHeader =
    "rho,n_samples,mean_shift,shift_variance,mean_unique_terms,"
    "mean_qubit_support";

/// Ensemble sweep over every (rho, N) cell. Member seeds derive from
/// (seed, rho index, N index, member index), and members are reduced in
/// index order, so the result is identical for any worker count.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, int jobs);

std::string sweep_rows_csv(const std::vector<SweepRow>& rows);

/// One phase-estimation session of the ensemble.
struct PeSessionSummary {
  std::size_t session = 0;
  double energy_estimate = 0.0;
  double energy_error = 0.0;  // estimate - E_0
  double phase_error = 0.0;   // |posterior mean - E_0 t|
  double posterior_sigma = 0.0;
  double gamma = 0.0;
  double lambda = 0.0;
  std::uint64_t total_segments = 0;
  double theorem_budget = 0.0;  // 2 T lambda^2/(gamma-2lambda)^2 + 3 sigma
  bool within_budget = false;
};

struct PeBatchResult {
  std::vector<PeSessionSummary> summaries;
  double ground_energy = 0.0;
  double time_per_rep = 0.0;
  std::string traces_csv;
  std::string summary_csv;
};

PeBatchResult run_pe_batch(const SweepConfig& cfg, int jobs);

/// Bound-report CSV rows plus satisfaction-rate tables for the random
/// stress suites. strict_violation is set when any Appendix B/C or
/// Lemma-1 row fails (those inequalities are theorems, not perturbative
/// estimates); the CLI maps it to exit code 3.
struct AuditResult {
  bool strict_violation = false;
  std::size_t rows = 0;
  std::string report_csv;
  std::string rates_csv;
};

inline constexpr const char* kAuditCsvHeader =
    "context,gamma,lambda,m,bound,observed,satisfied";
inline constexpr const char* kAuditRatesHeader =
    "context,ratio_bin_upper,instances,satisfied,rate";

AuditResult run_bounds_audit(const SweepConfig& cfg, int jobs);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace randpe
