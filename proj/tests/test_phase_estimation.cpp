// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "randpe/bounds.hpp"
#include "randpe/phase_estimation.hpp"
#include "randpe/rng.hpp"
#include "test_helpers.hpp"

using namespace randpe;
using randpe::testing::tfim_chain;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("fractional reps: segment count and dt") {
  ExperimentSetting s{2.5, 0.0, 0.4};
  CHECK(s.segment_count() == 3);
  CHECK(s.segment_dt() == doctest::Approx(2.5 * 0.4 / 3.0));
  ExperimentSetting integer{4.0, 0.0, 0.4};
  CHECK(integer.segment_count() == 4);
  CHECK(integer.segment_dt() == doctest::Approx(0.4));
}

TEST_CASE("simulate_outcome reproduces the analytic likelihood for eigenstates") {
  const Hamiltonian h = tfim_chain(3, 1.0, 0.6);
  const Eigensystem es = diagonalize(h);
  const QuantumState ground = es.state(0);
  const double energy = es.energies[0];
  const double t = kPi / (coefficient_one_norm(h) + 0.1);

  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const double reps = 1.0 + std::floor(rng.next_double(0.0, 5.0));
    const double theta = rng.next_double(-kPi, kPi);
    const ExperimentSetting setting{reps, theta, t};
    const std::vector<Hamiltonian> segments(setting.segment_count(), h);
    const SimulatedOutcome sim =
        simulate_outcome(ground, std::span<const Hamiltonian>(segments),
                         setting, rng.next_u64());
    const double predicted = likelihood(0, energy * t, reps, theta);
    CHECK(sim.prob_zero == doctest::Approx(predicted).epsilon(1e-9));
  }
}

TEST_CASE("theta = E t forces outcome 0 with certainty") {
  const Hamiltonian h = tfim_chain(2, 1.0, 0.5);
  const Eigensystem es = diagonalize(h);
  const QuantumState ground = es.state(0);
  const double t = 0.3;
  const double theta = wrap_angle(es.energies[0] * t);
  const ExperimentSetting setting{1.0, theta, t};
  const std::vector<Hamiltonian> segments{h};
  const SimulatedOutcome sim = simulate_outcome(
      ground, std::span<const Hamiltonian>(segments), setting, 12345);
  CHECK(sim.prob_zero == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sim.outcome == 0);
}

TEST_CASE("eigenstate is unchanged by the projective measurement") {
  const Hamiltonian h = tfim_chain(3, 1.0, 0.5);
  const QuantumState ground = diagonalize(h).state(0);
  const ExperimentSetting setting{2.0, 0.7, 0.25};
  const std::vector<Hamiltonian> segments(2, h);
  const SimulatedOutcome sim = simulate_outcome(
      ground, std::span<const Hamiltonian>(segments), setting, 5);
  // post state equals the input up to a global phase
  const std::complex<double> overlap = ground.dot(sim.post_state);
  CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fractional reps realize the exact fractional phase") {
  const Hamiltonian h = tfim_chain(2, 1.0, 0.5);
  const Eigensystem es = diagonalize(h);
  const QuantumState ground = es.state(0);
  const double t = 0.4;
  const double reps = 2.75;  // 3 segments of dt = 2.75 t / 3
  const ExperimentSetting setting{reps, 0.2, t};
  const std::vector<Hamiltonian> segments(3, h);
  const SimulatedOutcome sim = simulate_outcome(
      ground, std::span<const Hamiltonian>(segments), setting, 9);
  CHECK(sim.prob_zero ==
        doctest::Approx(likelihood(0, es.energies[0] * t, reps, 0.2))
            .epsilon(1e-9));
}

TEST_CASE("segment count mismatch is rejected") {
  const Hamiltonian h = tfim_chain(2, 1.0, 0.5);
  const QuantumState ground = diagonalize(h).state(0);
  const ExperimentSetting setting{2.5, 0.0, 0.3};
  const std::vector<Hamiltonian> segments(2, h);  // needs 3
  CHECK_THROWS_AS(simulate_outcome(ground,
                                   std::span<const Hamiltonian>(segments),
                                   setting, 1),
                  std::invalid_argument);
}

TEST_CASE("resampled segments track the accumulated ground phase") {
  // Per-repetition resampling: the ancilla-0 amplitude must match
  // exp(-i sum_k E_0^k dt) up to the leakage the sequence bound allows.
  const Hamiltonian h = tfim_chain(2, 1.0, 0.5);
  SplitMix64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Hamiltonian> segments =
        make_random_sequence(2, 4, 0.05, rng.next_u64());
    const SequenceStats stats = sequence_stats(segments);
    const Eigensystem first = diagonalize(segments.front());
    const QuantumState ground = first.state(0);
    const double t = kPi / (coefficient_one_norm(segments.front()) + 0.1);
    const ExperimentSetting setting{4.0, 0.0, t};
    const double dt = setting.segment_dt();

    // branch-1 amplitude after the controlled product
    QuantumState branch = ground;
    for (const auto& seg : segments) branch = evolve(branch, seg, dt);
    double accumulated = 0.0;
    for (const auto& seg : segments) {
      accumulated += diagonalize(seg).energies[0] * dt;
    }
    const std::complex<double> predicted =
        std::exp(std::complex<double>(0.0, -accumulated));
    const std::complex<double> actual = ground.dot(branch);
    const double budget = 2.0 * 4.0 * stats.lambda * stats.lambda /
                          std::pow(stats.gamma - 2.0 * stats.lambda, 2.0);
    CHECK(std::abs(actual - predicted) <= budget + 20.0 * stats.lambda *
                                                       stats.lambda /
                                                       (stats.gamma * stats.gamma));
  }
  (void)h;
}

TEST_CASE("run_session with the exact Hamiltonian recovers E0") {
  const Hamiltonian h = tfim_chain(4, 1.0, 0.5);
  const double e0 = ground_energy(h);
  SessionConfig cfg;
  cfg.n_experiments = 40;
  cfg.grid_points = 1 << 14;
  const SessionResult r = run_session(h, SessionSamplerConfig{}, cfg, 1234);
  CHECK(std::abs(r.phase_estimate - e0 * r.time_per_rep) < 1e-3);
  CHECK(r.energy_estimate == doctest::Approx(r.phase_estimate / r.time_per_rep));
  CHECK(r.sequence.max_consecutive_diff == 0.0);
  CHECK_FALSE(r.underflow_hit);
}

TEST_CASE("run_session with zero experiments reports the prior mean") {
  const Hamiltonian h = tfim_chain(2, 1.0, 0.5);
  SessionConfig cfg;
  cfg.n_experiments = 0;
  const SessionResult r = run_session(h, SessionSamplerConfig{}, cfg, 7);
  CHECK(std::abs(r.phase_estimate) < 1e-12);
  CHECK(r.records.empty());
}

TEST_CASE("run_session is deterministic: identical traces for a fixed seed") {
  const Hamiltonian h = tfim_chain(3, 1.0, 0.5);
  SessionSamplerConfig sampler;
  sampler.enabled = true;
  sampler.rho = 0.5;
  sampler.n_draws = 64;
  SessionConfig cfg;
  cfg.n_experiments = 6;
  cfg.grid_points = 1 << 10;
  cfg.design.reps_cap = 16.0;
  const SessionResult a = run_session(h, sampler, cfg, 99);
  const SessionResult b = run_session(h, sampler, cfg, 99);
  CHECK(session_trace_csv(a) == session_trace_csv(b));
  CHECK(a.sequence.total_segments > 0);
  CHECK(a.sequence.max_consecutive_diff > 0.0);
}

TEST_CASE("session trace csv has one row per experiment") {
  const Hamiltonian h = tfim_chain(2, 1.0, 0.5);
  SessionConfig cfg;
  cfg.n_experiments = 3;
  cfg.grid_points = 1 << 8;
  const SessionResult r = run_session(h, SessionSamplerConfig{}, cfg, 21);
  const std::string csv = session_trace_csv(r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
  CHECK(csv.find(kSessionTraceHeader) == 0);
}
