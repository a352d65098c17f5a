// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "randpe/rng.hpp"
#include "randpe/stats.hpp"
#include "randpe/sweep.hpp"
#include "test_helpers.hpp"

using namespace randpe;
using randpe::testing::data_path;

namespace {

SweepConfig small_sweep_config() {
  SweepConfig cfg;
  cfg.mode = "sweep";
  cfg.seed = 5;
  cfg.output = "out.csv";
  cfg.hamiltonian_path = data_path("tfim4.ham");
  cfg.rho_values = {0.0, 1.0};
  cfg.sample_counts = {4, 16};
  cfg.ensemble_size = 12;
  return cfg;
}

}  // namespace

TEST_CASE("config parsing: happy path and round-trip of fields") {
  const std::string text = R"({
    "schema": 1,
    "mode": "sweep",
    "seed": 42,
    "output": "sweep.csv",
    "hamiltonian": "data/tfim6.ham",
    "surrogate": "exact-ground-state",
    "rho": [0.0, 0.001, 1.0],
    "samples": [8, 32, 128],
    "ensemble": 100
  })";
  const SweepConfig cfg = parse_config(text);
  CHECK(cfg.mode == "sweep");
  CHECK(cfg.seed == 42);
  CHECK(cfg.rho_values.size() == 3);
  CHECK(cfg.sample_counts[2] == 128);
  CHECK(cfg.ensemble_size == 100);
}

TEST_CASE("config parsing: unknown keys and field-level errors") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"schema": 1, "mode": "sweep",
    "output": "x.csv", "hamiltonian": "h", "rho": [0], "samples": [1],
    "enssemble": 3})"),
                       doctest::Contains("enssemble"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"mode": "sweep"})"),
                       doctest::Contains("schema"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"schema": 1, "mode": "nope",
    "output": "x"})"),
                       doctest::Contains("mode"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"schema": 1, "mode": "sweep",
    "output": "x.csv", "hamiltonian": "h", "rho": [2.0], "samples": [1]})"),
                       doctest::Contains("rho"), ConfigError);
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}

TEST_CASE("surrogate file loading") {
  const Hamiltonian h = load_hamiltonian_file(data_path("tfim4.ham"));
  const std::string path = "/tmp/randpe_test_surrogate.txt";
  {
    std::ofstream out(path);
    for (std::size_t j = 0; j < h.terms.size(); ++j) {
      out << j << " " << 0.1 * static_cast<double>(j + 1) << "\n";
    }
  }
  const std::vector<double> values = load_surrogate_file(path, h.terms.size());
  CHECK(values.size() == h.terms.size());
  CHECK(values[2] == doctest::Approx(0.3));

  {
    std::ofstream out(path);
    out << "0 0.5\n";  // missing the rest
  }
  CHECK_THROWS_WITH_AS(load_surrogate_file(path, h.terms.size()),
                       doctest::Contains("missing"), ConfigError);
}

TEST_CASE("exact-ground-state surrogate matches solver expectations") {
  const Hamiltonian h = load_hamiltonian_file(data_path("tfim4.ham"));
  const std::vector<double> values = resolve_surrogate("exact-ground-state", h);
  const QuantumState ground = diagonalize(h).state(0);
  REQUIRE(values.size() == h.terms.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    CHECK(values[j] == doctest::Approx(expectation(ground, h.terms[j])));
  }
}

TEST_CASE("run_sweep: row invariants and reproducibility across jobs") {
  const SweepConfig cfg = small_sweep_config();
  const std::vector<SweepRow> serial = run_sweep(cfg, 1);
  const std::vector<SweepRow> parallel = run_sweep(cfg, 4);
  REQUIRE(serial.size() == 4);
  CHECK(sweep_rows_csv(serial) == sweep_rows_csv(parallel));

  const Hamiltonian h = load_hamiltonian_file(cfg.hamiltonian_path);
  for (const auto& row : serial) {
    CHECK(row.shift_variance >= 0.0);
    CHECK(row.mean_unique_terms <=
          static_cast<double>(std::min<std::uint64_t>(row.n_samples,
                                                      h.terms.size())));
    CHECK(row.mean_qubit_support <= static_cast<double>(h.qubit_count));
  }
}

TEST_CASE("run_sweep: single-member ensemble equals one draw") {
  SweepConfig cfg = small_sweep_config();
  cfg.ensemble_size = 1;
  cfg.rho_values = {0.5};
  cfg.sample_counts = {8};
  const std::vector<SweepRow> rows = run_sweep(cfg, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].shift_variance == doctest::Approx(0.0));

  const Hamiltonian h = load_hamiltonian_file(cfg.hamiltonian_path);
  const auto surrogate = resolve_surrogate("exact-ground-state", h);
  const auto dist = importance_weights(h, surrogate, 0.5);
  const auto draw = draw_sampled_hamiltonian(
      dist, h, 8, derive_seed(cfg.seed, {0, 0, 0, 0}));
  CHECK(rows[0].mean_unique_terms ==
        doctest::Approx(static_cast<double>(draw.unique_terms())));
  CHECK(rows[0].mean_shift == doctest::Approx(
      ground_energy(draw.hamiltonian) - ground_energy(h)));
}

TEST_CASE("sweep csv format is stable") {
  const std::vector<SweepRow> rows{{0.5, 16, -0.125, 0.25, 5.0, 3.5}};
  const std::string csv = sweep_rows_csv(rows);
  CHECK(csv == std::string(kSweepCsvHeader) +
                   "\n0.5,16,-0.125,0.25,5,3.5\n");
}

TEST_CASE("pe batch: deterministic across jobs, exact mode accurate") {
  SweepConfig cfg;
  cfg.mode = "pe-session";
  cfg.seed = 9;
  cfg.output = "pe";
  cfg.hamiltonian_path = data_path("tfim4.ham");
  cfg.sessions = 6;
  cfg.experiments = 30;
  cfg.grid_points = 1 << 12;
  cfg.reps_cap = 512.0;
  const PeBatchResult a = run_pe_batch(cfg, 1);
  const PeBatchResult b = run_pe_batch(cfg, 4);
  CHECK(a.traces_csv == b.traces_csv);
  CHECK(a.summary_csv == b.summary_csv);
  REQUIRE(a.summaries.size() == 6);
  for (const auto& s : a.summaries) {
    CHECK(s.lambda == 0.0);
    CHECK(s.phase_error < 0.05);  // loose; the acceptance suite pins 1e-3
  }
}

TEST_CASE("bounds audit: zero instances produce empty reports with headers") {
  SweepConfig cfg;
  cfg.mode = "bounds-audit";
  cfg.seed = 1;
  cfg.output = "audit.csv";
  cfg.strict_instances = 0;
  cfg.perturbative_instances = 0;
  cfg.lemma_one_instances = 0;
  cfg.scaling_trials = 0;
  const AuditResult audit = run_bounds_audit(cfg, 1);
  CHECK(audit.rows == 0);
  CHECK_FALSE(audit.strict_violation);
  CHECK(audit.report_csv == std::string(kAuditCsvHeader) + "\n");
  CHECK(audit.rates_csv == std::string(kAuditRatesHeader) + "\n");
}

TEST_CASE("bounds audit: small batch runs clean and deterministically") {
  SweepConfig cfg;
  cfg.mode = "bounds-audit";
  cfg.seed = 3;
  cfg.output = "audit.csv";
  cfg.hamiltonian_path = data_path("tfim4.ham");
  cfg.strict_instances = 8;
  cfg.perturbative_instances = 10;
  cfg.lemma_one_instances = 50;
  cfg.scaling_trials = 20;
  cfg.scaling_m = {4, 16};
  const AuditResult a = run_bounds_audit(cfg, 1);
  const AuditResult b = run_bounds_audit(cfg, 4);
  CHECK_FALSE(a.strict_violation);
  CHECK(a.report_csv == b.report_csv);
  CHECK(a.rates_csv == b.rates_csv);
  CHECK(a.rows > 0);
}

TEST_CASE("spearman rank correlation") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> up{2, 4, 6, 9};
  const std::vector<double> down{9, 6, 4, 2};
  CHECK(spearman_rank_correlation(x, up) == doctest::Approx(1.0));
  CHECK(spearman_rank_correlation(x, down) == doctest::Approx(-1.0));
  const std::vector<double> flat{1, 1, 1, 1};
  CHECK(spearman_rank_correlation(x, flat) == doctest::Approx(0.0));
}
