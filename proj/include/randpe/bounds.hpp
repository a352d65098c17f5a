// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "randpe/pauli.hpp"
#include "randpe/solver.hpp"

namespace randpe {

/// Spectral statistics of a sequence of Hamiltonians: gamma is the minimum
/// ground gap of any member, lambda the maximum operator-norm difference
/// between consecutive members, m_count the sequence length.
struct SequenceStats {
  double gamma = 0.0;
  double lambda = 0.0;
  std::uint64_t m_count = 0;
  bool degenerate = false;  // some member's gap fell below kDegeneracyTol
};

/// One checked inequality. For upper bounds satisfied means
/// observed <= bound within the slack; lower-bound checks are expressed in a
/// complementary form (e.g. ground-state leakage) so the same convention
/// applies, with the context string naming the form.
struct BoundReport {
  double bound_value = 0.0;
  double observed_value = 0.0;
  bool satisfied = false;
  std::string context;
};

BoundReport make_report(std::string context, double bound, double observed,
                        double slack = 1e-12);

SequenceStats sequence_stats(std::span<const Hamiltonian> seq);

/// Maximum eigenphase error over the sequence: 2 M lambda^2 / (gamma - 2 lambda)^2.
/// Requires gamma > 2 lambda (the bound is vacuous otherwise).
double eigenphase_shift_bound(const SequenceStats& s);

/// True iff lambda/gamma < sqrt(1 - exp(log(1 - epsilon) / (M - 1))), the
/// condition under which the ground state survives the whole sequence with
/// failure probability at most epsilon. With use_m_transitions = false the
/// exponent M is used instead of M - 1 (the convention when the initial
/// state is the unsampled ground state).
bool failure_condition(const SequenceStats& s, double epsilon,
                       bool use_m_minus_one = true);

/// Exact product of squared consecutive ground-state overlaps
/// prod_k |<psi_0^{k+1} | psi_0^k>|^2.
double overlap_success_probability(std::span<const Hamiltonian> seq);

/// Exact deviation of one evolution segment from its adiabatic counterpart
/// on the ground state:
///   observed = || (U_k - U_{k,ad}) P_0^k ||,
///   bound    = 2 lambda^2 / (gamma - 2 lambda)^2,
/// where U_{k,ad} transports each eigenstate of h_k onto its
/// maximum-overlap partner in h_next while applying the h_k eigenphase.
/// Throws if the overlap pairing is ambiguous (two candidate overlaps
/// within 1e-6) or gamma <= 2 lambda.
BoundReport adiabatic_deviation(const Hamiltonian& h_k,
                                const Hamiltonian& h_next, double dt);

/// Same comparison across the whole sequence of seq.size() - 1 transitions:
///   observed = || prod_k U_k P_0^k psi_0^1 - prod_k U_{k,ad} P_0^k psi_0^1 ||,
///   bound    = 2 (seq.size() - 1) lambda^2 / (gamma - 2 lambda)^2.
BoundReport sequence_phase_deviation(std::span<const Hamiltonian> seq,
                                     double dt);

/// Posterior-mean perturbation from a sup-norm likelihood shift:
/// 5 pi Delta / P(E). Requires p_evidence >= 2 delta_sup.
double posterior_perturbation_bound(double delta_sup, double p_evidence);

/// Factored form over n independent experiments whose per-experiment
/// likelihood ratios deviate from 1 by at most ratio_gap:
/// 5 pi ((1 + ratio_gap)^n - 1). (This gap is the likelihood-ratio bound,
/// not the spectral gap.)
double factored_perturbation_bound(double ratio_gap, int n_experiments);

/// Mean shift of the joint likelihood relative to P(o):
/// returns the factor 2 sum_j r_j with r_j = max_phi |eps_j(phi)| / P(o_j|phi).
/// Requires every r_j <= 1/2 and n * max_j r_j < 1; violations name j.
double joint_likelihood_shift_bound(std::span<const double> ratios);

/// Posterior-mean shift: 8 (sum_j r_j) * mean of |phi| under the posterior.
double posterior_mean_shift_bound(std::span<const double> ratios,
                                  double abs_phi_post);

/// Budget for a uniform eigenphase error |delta_phi| across experiments with
/// repetition counts m_values: 8 pi (sum_j M_j / min_likelihood) |delta_phi|.
double phase_error_budget(std::span<const double> m_values,
                          double min_likelihood, double delta_phi);

// ---------------------------------------------------------------------------
// Empirical checkers: exact numerics on small instances vs the bounds above.
// ---------------------------------------------------------------------------

/// Likelihood parameters of one recorded experiment.
struct PhaseExperiment {
  int outcome = 0;
  double reps = 1.0;
  double theta = 0.0;
};

/// A grid-built strict-suite instance: a set of experiments plus an injected
/// eigenphase shift delta_phi applied to the perturbed likelihood branch.
/// Instances generated by make_strict_instance satisfy every hypothesis of
/// the Appendix B/C lemmas (outcome 0 and reps < 1/2 keep each likelihood
/// bounded away from zero on the whole branch).
struct StrictInstance {
  std::vector<PhaseExperiment> experiments;
  double delta_phi = 0.0;
};

StrictInstance make_strict_instance(std::uint64_t seed);

/// All four strict checks on one instance, evaluated by numerical
/// integration on a grid of grid_points points (default: 10x the posterior
/// module's resolution). Order: posterior_perturbation,
/// joint_likelihood_shift, posterior_mean_shift, phase_error_budget.
std::vector<BoundReport> check_strict_instance(
    const StrictInstance& inst,
    std::size_t grid_points = 10 * (std::size_t{1} << 14));

/// A random gapped 2-3 qubit Hamiltonian sequence whose realized
/// lambda/gamma does not exceed ratio_cap. Deterministic in seed.
std::vector<Hamiltonian> make_random_sequence(unsigned qubits,
                                              std::size_t length,
                                              double ratio_cap,
                                              std::uint64_t seed);

/// Ground-state survival of a sequence, reported as leakage so the upper
/// bound convention applies:
///   observed = 1 - prod |<psi_0^{k+1}|psi_0^k>|^2,
///   bound    = 1 - (1 - (lambda/gamma)^2)^(M-1)   [+ 1e-9 slack].
BoundReport check_overlap_bound(std::span<const Hamiltonian> seq);

/// RMS likelihood error of uniform subsampling as a function of m, with the
/// likelihood probed at unit repetition and a quadrature offset from the
/// unsampled phase (maximum sensitivity, no saturation). slope is the
/// log-log least-squares slope of RMS vs m; invalid when some RMS is zero.
struct ScalingReport {
  std::vector<std::uint64_t> m_values;
  std::vector<double> rms;
  double slope = 0.0;
  bool slope_valid = false;
};

ScalingReport subsample_error_scaling(const Hamiltonian& h,
                                      const QuantumState& psi,
                                      std::span<const std::uint64_t> m_values,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace randpe
