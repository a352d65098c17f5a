// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "randpe/pauli.hpp"
#include "randpe/posterior.hpp"
#include "randpe/sampler.hpp"
#include "randpe/solver.hpp"

namespace randpe {

/// One interferometry experiment: reps may be fractional; the circuit then
/// realizes ceil(reps) segments of duration reps * t / ceil(reps).
struct ExperimentSetting {
  double reps = 1.0;          // M_j > 0
  double theta = 0.0;         // phase offset in [-pi, pi)
  double time_per_rep = 1.0;  // t, energy -> phase scale

  std::uint64_t segment_count() const;
  double segment_dt() const;  // reps * t / ceil(reps)
};

struct ExperimentRecord {
  ExperimentSetting setting;
  int outcome = 0;
  std::vector<std::uint64_t> segment_seeds;  // one sampled H per repetition
};

UpdateResult bayes_update(const PosteriorGrid& prior,
                          const ExperimentRecord& record);

/// Adaptive experiment design.
///
/// reps = reps_scale / sigma_circ(p), clamped to [reps_min, reps_cap].
/// Coupling reps to the posterior width is what makes the loop self-healing:
/// a confused (multimodal) posterior has a large sigma_circ, which pulls
/// reps back down until the coarse ambiguity is resolved.
///
/// With dither enabled the value is additionally multiplied by a fixed
/// pattern cycling over one octave. Two phases 2 pi k / reps apart produce
/// identical likelihoods, so at frozen reps an alias lobe of the posterior
/// can never be removed and the width stalls; sweeping reps across an octave
/// leaves no lobe aliased at every scale. Sessions enable dither.
///
/// theta is the circular posterior mean on even experiment indices (the
/// branch-linear mean misreports lobes straddling +-pi) and the mean plus a
/// pi/(2 reps) quadrature offset on odd ones: the likelihood family is even
/// around theta, so a theta pinned to the mean alone can never move a
/// posterior that is symmetric about it.
struct DesignStrategy {
  /// Posterior-width estimate feeding the repetition rule. The circular
  /// standard deviation is the plain default; kTrimmed99 uses the 99%
  /// highest-density trimmed circular deviation, which a
  /// sub-percent remnant of far-away mass cannot inflate, so the repetition
  /// count keeps tracking the dominant lobe. Sessions use kTrimmed99.
  enum class WidthEstimator { kCircularStddev, kTrimmed99 };

  /// Placement of the pi/(2 reps) offset relative to the posterior mean.
  enum class Quadrature { kAlternate, kAlways, kNever };

  WidthEstimator width = WidthEstimator::kCircularStddev;
  Quadrature quadrature = Quadrature::kAlternate;
  double reps_scale = 1.25;
  double reps_cap = 4096.0;
  double reps_min = 1.0;
  bool dither = false;
  double time_per_rep = 1.0;
};

ExperimentSetting design_experiment(const PosteriorGrid& p,
                                    const DesignStrategy& strategy,
                                    std::size_t experiment_index = 0);

struct SimulatedOutcome {
  int outcome = 0;
  QuantumState post_state;  // system register after the ancilla projection
  double prob_zero = 0.0;   // Born probability of outcome 0
};

/// Exact statevector simulation of the single-ancilla interferometer:
/// ancilla prepared in (|0> + |1>)/sqrt(2), phase offset on the ancilla,
/// controlled product prod_k e^{-i H_k dt} with one (possibly resampled)
/// Hamiltonian per repetition, final Hadamard, one Born sample.
/// segments.size() must equal ceil(reps).
SimulatedOutcome simulate_outcome(const QuantumState& system,
                                  std::span<const Hamiltonian> segments,
                                  const ExperimentSetting& setting,
                                  std::uint64_t seed);

/// Overload reusing prior factorizations of the segment Hamiltonians.
SimulatedOutcome simulate_outcome(const QuantumState& system,
                                  std::span<const Eigensystem* const> segments,
                                  const ExperimentSetting& setting,
                                  std::uint64_t seed);

/// Per-repetition resampling configuration for a session. With enabled =
/// false every segment evolves under the exact source Hamiltonian.
struct SessionSamplerConfig {
  bool enabled = false;
  double rho = 1.0;
  std::uint64_t n_draws = 1;
  double weight_floor_fraction = kDefaultWeightFloorFraction;
  // Empty: use exact-ground-state expectations computed by the solver.
  std::vector<double> surrogate_expectations;
};

inline DesignStrategy session_default_design() {
  DesignStrategy d;
  d.width = DesignStrategy::WidthEstimator::kTrimmed99;
  d.dither = true;
  d.reps_scale = 1.6;
  return d;
}

struct SessionConfig {
  std::size_t n_experiments = 40;
  std::size_t grid_points = kDefaultGridPoints;
  DesignStrategy design = session_default_design();
  // 0 = choose t = pi / (sum_j |c_j| + 0.1), which keeps |E| t < pi for
  // every eigenvalue so phi = E t never wraps.
  double time_per_rep = 0.0;
};

/// Gap / consecutive-difference statistics of the segment sequence,
/// collected while a session runs (every segment is diagonalized anyway).
struct SegmentSequenceStats {
  double min_gap = 0.0;               // gamma over all segments
  double max_consecutive_diff = 0.0;  // lambda over consecutive pairs
  std::uint64_t total_segments = 0;
};

struct SessionResult {
  std::vector<ExperimentRecord> records;
  std::vector<double> posterior_means;      // after each experiment
  std::vector<double> posterior_variances;  // after each experiment
  PosteriorGrid posterior;
  double time_per_rep = 0.0;
  double phase_estimate = 0.0;   // posterior mean, radians
  double energy_estimate = 0.0;  // phase_estimate / t
  bool underflow_hit = false;
  SegmentSequenceStats sequence;
};

/// Runs n_experiments rounds of design -> (re)sample ceil(M) Hamiltonians ->
/// simulate -> update, starting from the exact ground state of h and a
/// uniform prior. Fully deterministic given seed.
SessionResult run_session(const Hamiltonian& h,
                          const SessionSamplerConfig& sampler,
                          const SessionConfig& config, std::uint64_t seed);

/// Line-delimited trace, one row per experiment:
/// experiment,reps,theta,outcome,segment_seeds,posterior_mean,posterior_variance
/// with segment seeds ';'-joined and floats at 17 significant digits.
std::string session_trace_csv(const SessionResult& result);
inline constexpr const char* kSessionTraceHeader =
    "experiment,reps,theta,outcome,segment_seeds,posterior_mean,"
    "posterior_variance";

}  // namespace randpe
