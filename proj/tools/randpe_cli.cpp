// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

//
// randpe — sampling sweeps, phase-estimation ensembles and bound audits
// driven by a JSON config. Exit codes: 0 success, 1 config error,
// 2 numeric failure, 3 bound violation in a strict suite.
//

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "randpe/sweep.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("RANDPE_JOBS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return omp_get_max_threads();
}

std::string output_path(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

struct CommonOptions {
  std::string config_path;
  std::string output_dir;
  std::uint64_t seed_override = 0;
  bool has_seed_override = false;
  int jobs = default_jobs();
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "config file (JSON, schema 1)")
      ->required();
  cmd->add_option("--output", opts.output_dir,
                  "directory for output files (default: config paths as-is)");
  cmd->add_option("--seed", opts.seed_override, "override the config seed")
      ->each([&](const std::string&) { opts.has_seed_override = true; });
  cmd->add_option("--jobs", opts.jobs, "worker threads (env RANDPE_JOBS)")
      ->check(CLI::PositiveNumber);
}

randpe::SweepConfig load_for_mode(const CommonOptions& opts,
                                  const std::string& expected_mode) {
  randpe::SweepConfig cfg = randpe::load_config(opts.config_path);
  if (cfg.mode != expected_mode) {
    throw randpe::ConfigError("config: mode `" + cfg.mode +
                              "` does not match subcommand (expected `" +
                              expected_mode + "`)");
  }
  if (opts.has_seed_override) cfg.seed = opts.seed_override;
  return cfg;
}

int run_sweep_cmd(const CommonOptions& opts) {
  const randpe::SweepConfig cfg = load_for_mode(opts, "sweep");
  const auto rows = randpe::run_sweep(cfg, opts.jobs);
  const std::string path = output_path(opts.output_dir, cfg.output);
  randpe::write_text_file(path, randpe::sweep_rows_csv(rows));
  std::printf("sweep: %zu rows -> %s\n", rows.size(), path.c_str());
  return 0;
}

int run_pe_cmd(const CommonOptions& opts) {
  const randpe::SweepConfig cfg = load_for_mode(opts, "pe-session");
  const randpe::PeBatchResult batch = randpe::run_pe_batch(cfg, opts.jobs);
  const std::string traces =
      output_path(opts.output_dir, cfg.output + ".traces.csv");
  const std::string summary =
      output_path(opts.output_dir, cfg.output + ".summary.csv");
  randpe::write_text_file(traces, batch.traces_csv);
  randpe::write_text_file(summary, batch.summary_csv);

  std::size_t within = 0;
  std::vector<double> errors;
  errors.reserve(batch.summaries.size());
  for (const auto& s : batch.summaries) {
    errors.push_back(s.phase_error);
    if (s.within_budget) ++within;
  }
  std::sort(errors.begin(), errors.end());
  const double median =
      errors.empty() ? 0.0 : errors[errors.size() / 2];
  std::printf("pe: %zu sessions, median |phase error| %.3e rad, "
              "%zu/%zu within the sequence budget -> %s\n",
              batch.summaries.size(), median, within, batch.summaries.size(),
              summary.c_str());
  return 0;
}

int run_audit_cmd(const CommonOptions& opts) {
  const randpe::SweepConfig cfg = load_for_mode(opts, "bounds-audit");
  const randpe::AuditResult audit = randpe::run_bounds_audit(cfg, opts.jobs);
  const std::string report = output_path(opts.output_dir, cfg.output);
  const std::string rates =
      output_path(opts.output_dir, cfg.output + ".rates.csv");
  randpe::write_text_file(report, audit.report_csv);
  randpe::write_text_file(rates, audit.rates_csv);
  std::printf("bounds-audit: %zu checks -> %s\n", audit.rows, report.c_str());
  if (audit.strict_violation) {
    std::fprintf(stderr, "bounds-audit: strict bound violated\n");
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized-Hamiltonian phase estimation toolkit"};
  app.require_subcommand(1);

  CommonOptions sweep_opts, pe_opts, audit_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "sampling sweep over (rho, N)");
  add_common(sweep, sweep_opts);
  CLI::App* pe = app.add_subcommand("pe", "phase-estimation session ensemble");
  add_common(pe, pe_opts);
  CLI::App* audit =
      app.add_subcommand("bounds-audit", "random-instance bound stress suites");
  add_common(audit, audit_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      omp_set_num_threads(sweep_opts.jobs);
      return run_sweep_cmd(sweep_opts);
    }
    if (pe->parsed()) {
      omp_set_num_threads(pe_opts.jobs);
      return run_pe_cmd(pe_opts);
    }
    omp_set_num_threads(audit_opts.jobs);
    return run_audit_cmd(audit_opts);
  } catch (const randpe::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
