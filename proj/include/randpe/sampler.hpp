// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "randpe/pauli.hpp"

namespace randpe {

/// Raw hedged weights below floor_fraction * max(raw weight) are clamped up
/// to that floor before normalization, so no term becomes unsampleable at
/// rho = 0 (a zero weight would bias the sampled operator by erasing its
/// term). Pass 0 to disable the floor.
inline constexpr double kDefaultWeightFloorFraction = 1e-9;

/// Normalized per-term sampling weights for a source Hamiltonian.
struct ImportanceDistribution {
  std::vector<double> weights;  // f(j) >= 0, sums to 1, aligned with terms
  double rho = 1.0;             // hedging parameter in [0, 1]
  std::vector<double> surrogate_expectations;  // <psi~| H_j |psi~> per term
};

/// A randomly generated Hamiltonian with its provenance.
struct SampledHamiltonian {
  Hamiltonian hamiltonian;  // canonical form of (1/N) sum_i H_{l_i} / f(l_i)
  std::uint64_t seed = 0;
  std::uint64_t draws = 0;                           // N
  std::map<std::size_t, std::uint64_t> source_counts;  // term index -> count

  std::size_t unique_terms() const { return hamiltonian.terms.size(); }
};

/// Hedged importance weights f(j) proportional to
///   (1 - rho) |<H_j>| + rho ||H_j||.
/// The expectation carries an absolute value: the optimal importance
/// function is |<H_j>| and probabilities cannot be negative.
/// expectations must align with h.terms; throws if every raw weight is zero.
ImportanceDistribution importance_weights(
    const Hamiltonian& h, const std::vector<double>& surrogate_expectations,
    double rho, double floor_fraction = kDefaultWeightFloorFraction);

/// N i.i.d. categorical draws from dist; the result is the canonical form of
///   (1/N) sum_i H_{l_i} / f(l_i),
/// so duplicate draws merge and the sampled operator usually has fewer
/// unique terms than the source. Deterministic for fixed seed.
SampledHamiltonian draw_sampled_hamiltonian(const ImportanceDistribution& dist,
                                            const Hamiltonian& h,
                                            std::uint64_t n_draws,
                                            std::uint64_t seed);

/// m uniform i.i.d. draws with replacement, scaled by L/m:
///   H_est = (L/m) sum_{i=1}^{m} H_{l_i}.
SampledHamiltonian uniform_subsample(const Hamiltonian& h, std::uint64_t m,
                                     std::uint64_t seed);

/// Single-draw importance-sampling variance of the mean estimate of F under
/// weights f (N = F.size() matches the 1/N mean convention):
///   (1/N^2) sum_j F(j)^2 / f(j)  -  ((1/N) sum_j F(j))^2.
/// Returns +infinity when some f(j) = 0 at F(j) != 0.
double estimator_variance(const ImportanceDistribution& dist,
                          const std::vector<double>& values);

/// Variance attained by the optimal importance function f(j) ~ |F(j)|:
///   (E|F|)^2 - (E F)^2; zero when all F(j) share one sign.
double optimal_variance(const std::vector<double>& values);

/// Upper bound on the variance when the importance function is built from a
/// perturbed F~ with | |F~(j)| - |F(j)| | = |delta_j| <= |F(j)|/2:
///   (4/N^2) (sum_k |delta_k|) (sum_j |F(j)|) + optimal_variance(F).
/// Throws (naming the offending index) if the perturbation bound fails.
double robust_variance_bound(const std::vector<double>& values,
                             const std::vector<double>& perturbed);

}  // namespace randpe
