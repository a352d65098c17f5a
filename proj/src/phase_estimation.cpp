// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "randpe/phase_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "randpe/dense.hpp"
#include "randpe/rng.hpp"

namespace randpe {

namespace {
constexpr double kPi = std::numbers::pi;

// Seed-derivation tags for the per-session streams.
enum : std::uint64_t { kSegmentStream = 1, kBornStream = 2 };
}  // namespace

std::uint64_t ExperimentSetting::segment_count() const {
  if (!(reps > 0.0)) throw std::invalid_argument("reps must be positive");
  return static_cast<std::uint64_t>(std::ceil(reps));
}

double ExperimentSetting::segment_dt() const {
  return reps * time_per_rep / static_cast<double>(segment_count());
}

UpdateResult bayes_update(const PosteriorGrid& prior,
                          const ExperimentRecord& record) {
  return bayes_update(prior, record.outcome, record.setting.reps,
                      record.setting.theta);
}

ExperimentSetting design_experiment(const PosteriorGrid& p,
                                    const DesignStrategy& strategy,
                                    std::size_t experiment_index) {
  if (!(strategy.reps_min > 0.0) || strategy.reps_cap < strategy.reps_min) {
    throw std::invalid_argument("need 0 < reps_min <= reps_cap");
  }
  const double sigma =
      strategy.width == DesignStrategy::WidthEstimator::kTrimmed99
          ? trimmed_circular_stddev(p, 0.99)
          : circular_stddev(p);
  double raw_reps = strategy.reps_scale / sigma;
  if (strategy.dither) {
    // One octave in a scrambled order; period 8 so both theta parities
    // sample the whole range.
    static constexpr int kPattern[8] = {0, 5, 2, 7, 4, 1, 6, 3};
    raw_reps *= std::exp2(kPattern[experiment_index % 8] / 7.0 - 0.5);
  }
  const double reps =
      std::clamp(raw_reps, strategy.reps_min, strategy.reps_cap);
  // The design angle must be circular: the branch-linear mean reports the
  // gap between the lobes when mass straddles +-pi, and every later
  // experiment would then probe empty space. The linear fallback only
  // serves the essentially-uniform case where the moment underflows.
  double theta =
      std::isinf(circular_stddev(p)) ? posterior_mean(p) : circular_mean(p);
  const bool offset =
      strategy.quadrature == DesignStrategy::Quadrature::kAlways ||
      (strategy.quadrature == DesignStrategy::Quadrature::kAlternate &&
       experiment_index % 2 == 1);
  if (offset) theta = wrap_angle(theta + kPi / (2.0 * reps));
  return ExperimentSetting{reps, theta, strategy.time_per_rep};
}

SimulatedOutcome simulate_outcome(const QuantumState& system,
                                  std::span<const Eigensystem* const> segments,
                                  const ExperimentSetting& setting,
                                  std::uint64_t seed) {
  if (segments.size() != setting.segment_count()) {
    throw std::invalid_argument(
        "got " + std::to_string(segments.size()) + " segments for ceil(M) = " +
        std::to_string(setting.segment_count()));
  }
  for (const Eigensystem* es : segments) {
    if (es->vectors.rows() != system.size()) {
      throw std::invalid_argument("segment dimension does not match state");
    }
  }

  // The ancilla never entangles with more than a relative phase and a
  // branch-dependent system evolution, so the joint state is carried as the
  // pair (branch0, branch1) of system-sized vectors.
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Vector branch0 = system * inv_sqrt2;
  Vector branch1 =
      branch0 * std::exp(std::complex<double>(0.0, setting.reps * setting.theta));

  const double dt = setting.segment_dt();
  for (const Eigensystem* es : segments) {
    branch1 = evolve(branch1, *es, dt);
  }

  Vector plus = (branch0 + branch1) * inv_sqrt2;
  Vector minus = (branch0 - branch1) * inv_sqrt2;
  const double prob_zero = std::min(1.0, plus.squaredNorm());

  SplitMix64 rng(seed);
  const int outcome = rng.next_double() < prob_zero ? 0 : 1;
  Vector post = outcome == 0 ? std::move(plus) : std::move(minus);
  post /= post.norm();
  return SimulatedOutcome{outcome, std::move(post), prob_zero};
}

SimulatedOutcome simulate_outcome(const QuantumState& system,
                                  std::span<const Hamiltonian> segments,
                                  const ExperimentSetting& setting,
                                  std::uint64_t seed) {
  std::vector<Eigensystem> systems;
  systems.reserve(segments.size());
  for (const auto& h : segments) systems.push_back(diagonalize(h));
  std::vector<const Eigensystem*> ptrs;
  ptrs.reserve(systems.size());
  for (const auto& es : systems) ptrs.push_back(&es);
  return simulate_outcome(system, std::span<const Eigensystem* const>(ptrs),
                          setting, seed);
}

SessionResult run_session(const Hamiltonian& h,
                          const SessionSamplerConfig& sampler,
                          const SessionConfig& config, std::uint64_t seed) {
  const Eigensystem source = diagonalize(h);
  const double t = config.time_per_rep > 0.0
                       ? config.time_per_rep
                       : kPi / (coefficient_one_norm(h) + 0.1);
  if (std::abs(source.energies[0]) * t >= kPi) {
    throw std::runtime_error(
        "|E_0| t >= pi: the eigenphase would wrap; choose a smaller t");
  }

  ImportanceDistribution dist;
  if (sampler.enabled) {
    std::vector<double> expectations = sampler.surrogate_expectations;
    if (expectations.empty()) {
      const QuantumState ground = source.state(0);
      expectations.reserve(h.terms.size());
      for (const auto& term : h.terms) {
        expectations.push_back(expectation(ground, term));
      }
    }
    dist = importance_weights(h, expectations, sampler.rho,
                              sampler.weight_floor_fraction);
  }

  SessionResult result;
  result.time_per_rep = t;
  result.posterior = uniform_grid(config.grid_points);
  result.sequence.min_gap = gap(source).value;

  DesignStrategy design = config.design;
  design.time_per_rep = t;

  QuantumState state = source.state(0);
  const Hamiltonian* prev_segment = nullptr;
  Hamiltonian prev_storage;

  for (std::size_t e = 0; e < config.n_experiments; ++e) {
    ExperimentRecord record;
    record.setting = design_experiment(result.posterior, design, e);
    const std::uint64_t n_segments = record.setting.segment_count();

    std::vector<Eigensystem> sampled_systems;
    std::vector<const Eigensystem*> segments(n_segments, &source);
    if (sampler.enabled) {
      sampled_systems.reserve(n_segments);
      record.segment_seeds.reserve(n_segments);
      for (std::uint64_t k = 0; k < n_segments; ++k) {
        const std::uint64_t segment_seed =
            derive_seed(seed, {kSegmentStream, e, k});
        SampledHamiltonian draw =
            draw_sampled_hamiltonian(dist, h, sampler.n_draws, segment_seed);
        record.segment_seeds.push_back(segment_seed);
        sampled_systems.push_back(diagonalize(draw.hamiltonian));
        segments[k] = &sampled_systems.back();

        result.sequence.min_gap =
            std::min(result.sequence.min_gap, gap(sampled_systems.back()).value);
        if (prev_segment != nullptr) {
          result.sequence.max_consecutive_diff =
              std::max(result.sequence.max_consecutive_diff,
                       operator_norm_diff(*prev_segment, draw.hamiltonian));
        }
        prev_storage = std::move(draw.hamiltonian);
        prev_segment = &prev_storage;
      }
    }
    result.sequence.total_segments += n_segments;

    SimulatedOutcome sim = simulate_outcome(
        state, std::span<const Eigensystem* const>(segments), record.setting,
        derive_seed(seed, {kBornStream, e}));
    record.outcome = sim.outcome;
    state = std::move(sim.post_state);

    UpdateResult update = bayes_update(result.posterior, record);
    result.underflow_hit |= update.underflow;
    result.posterior = std::move(update.posterior);

    result.posterior_means.push_back(posterior_mean(result.posterior));
    result.posterior_variances.push_back(posterior_variance(result.posterior));
    result.records.push_back(std::move(record));
  }

  result.phase_estimate = posterior_mean(result.posterior);
  result.energy_estimate = result.phase_estimate / t;
  return result;
}

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string session_trace_csv(const SessionResult& result) {
  std::string out = kSessionTraceHeader;
  out += '\n';
  for (std::size_t e = 0; e < result.records.size(); ++e) {
    const ExperimentRecord& r = result.records[e];
    out += std::to_string(e);
    out += ',';
    append_double(out, r.setting.reps);
    out += ',';
    append_double(out, r.setting.theta);
    out += ',';
    out += std::to_string(r.outcome);
    out += ',';
    for (std::size_t k = 0; k < r.segment_seeds.size(); ++k) {
      if (k) out += ';';
      out += std::to_string(r.segment_seeds[k]);
    }
    out += ',';
    append_double(out, result.posterior_means[e]);
    out += ',';
    append_double(out, result.posterior_variances[e]);
    out += '\n';
  }
  return out;
}

}  // namespace randpe
